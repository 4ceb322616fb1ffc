"""
Daily SIRS transmission over the evolving contact network.

Health states are column arrays indexed by person id. A day is processed in
a fixed order (grow, transmit, clear, vaccinate, tally) and every
transmission of the day is evaluated against start-of-day states.
"""

from __future__ import annotations

import logging
from dataclasses import astuple, dataclass, fields
from enum import IntEnum
from typing import Collection, List, Optional, Protocol, Tuple

import numpy as np

from seconet.config.schema import EpidemicConfig
from seconet.constants import FEMALE, LOGGER_NAME, MALE
from seconet.core.growth import grow_step
from seconet.core.network import ContactNetwork
from seconet.core.population import Population
from seconet.exceptions import ContractViolationError

logger = logging.getLogger(LOGGER_NAME)

NEVER = -1


class Compartment(IntEnum):
    SUSCEPTIBLE = 0
    INFECTED = 1
    RECOVERED = 2
    VACCINATED = 3


@dataclass(frozen=True)
class HealthState:
    compartment: Compartment
    infected_since: Optional[int] = None
    clearance_at: Optional[float] = None


@dataclass(frozen=True)
class DailyCounts:
    """Compartment tallies at the end of one day."""

    day: int
    S: int
    I: int  # noqa: E741
    R: int
    V: int
    S_f: int
    I_f: int
    R_f: int
    V_f: int
    S_m: int
    I_m: int
    R_m: int
    V_m: int
    new_inf: int = 0
    new_inf_f: int = 0
    new_inf_m: int = 0

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    def as_row(self) -> Tuple[int, ...]:
        return astuple(self)

    @property
    def total(self) -> int:
        return self.S + self.I + self.R + self.V


class EpidemicState:
    """Per-person compartment plus infection bookkeeping."""

    def __init__(self, genders: np.ndarray, clearance_mean: float):
        n = genders.shape[0]
        self.genders = np.asarray(genders, dtype=np.int64)
        self.clearance_mean = clearance_mean
        self.compartments = np.full(n, int(Compartment.SUSCEPTIBLE), dtype=np.int8)
        self.infected_since = np.full(n, NEVER, dtype=np.int64)
        self.clearance_at = np.full(n, np.nan, dtype=np.float64)

    def __len__(self) -> int:
        return int(self.compartments.shape[0])

    def __getitem__(self, i: int) -> HealthState:
        comp = Compartment(int(self.compartments[i]))
        if comp is Compartment.INFECTED:
            return HealthState(comp, int(self.infected_since[i]), float(self.clearance_at[i]))
        return HealthState(comp)

    def mask(self, compartment: Compartment) -> np.ndarray:
        return self.compartments == int(compartment)

    def ids(self, compartment: Compartment) -> np.ndarray:
        return np.flatnonzero(self.mask(compartment))

    def infect(self, ids: np.ndarray, day: int, rng: np.random.Generator) -> None:
        """Move ``ids`` (ascending) from S to I with a pre-sampled clearance day."""
        if ids.size == 0:
            return
        if np.any(self.compartments[ids] != Compartment.SUSCEPTIBLE):
            raise ContractViolationError("only susceptible people can be infected")
        self.compartments[ids] = Compartment.INFECTED
        self.infected_since[ids] = day
        self.clearance_at[ids] = day + rng.exponential(self.clearance_mean, size=ids.size)

    def vaccinate(self, ids: np.ndarray) -> None:
        if ids.size == 0:
            return
        if np.any(self.compartments[ids] != Compartment.SUSCEPTIBLE):
            bad = ids[self.compartments[ids] != Compartment.SUSCEPTIBLE]
            raise ContractViolationError(f"cannot vaccinate non-susceptible people {bad.tolist()}")
        self.compartments[ids] = Compartment.VACCINATED

    def end_infection(self, ids: np.ndarray, compartment: Compartment) -> None:
        self.compartments[ids] = compartment
        self.infected_since[ids] = NEVER
        self.clearance_at[ids] = np.nan

    def tally(self, day: int, new_ids: Optional[np.ndarray] = None) -> DailyCounts:
        """Counts of every compartment by gender, plus the day's new infections."""
        female = self.genders == FEMALE
        by_f = np.bincount(self.compartments[female], minlength=4)
        by_m = np.bincount(self.compartments[~female], minlength=4)
        new_ids = np.empty(0, dtype=np.int64) if new_ids is None else new_ids
        new_f = int(np.count_nonzero(self.genders[new_ids] == FEMALE))
        new_m = int(np.count_nonzero(self.genders[new_ids] == MALE))
        total = by_f + by_m
        return DailyCounts(
            day,
            *(int(c) for c in total),
            *(int(c) for c in by_f),
            *(int(c) for c in by_m),
            new_f + new_m,
            new_f,
            new_m,
        )


class VaccinationHook(Protocol):
    session_days: Collection[int]

    def __call__(self, network: ContactNetwork, state: EpidemicState, day: int) -> None: ...


def seed_infection(population: Population, config: EpidemicConfig, rng: np.random.Generator) -> EpidemicState:
    """
    Infect each person independently at day 0 with their gender's prevalence.

    Seeding covers the whole population, joined or not.
    """
    state = EpidemicState(population.genders, config.clearance_mean)
    prevalence = np.where(
        population.genders == FEMALE, config.init_prevalence_female, config.init_prevalence_male
    )
    infected = np.flatnonzero(rng.random(len(population)) < prevalence)
    state.infect(infected, 0, rng)
    logger.debug("Seeded %d infections at day 0", infected.size)
    return state


def coital_act_probability(link_age, config: EpidemicConfig):
    """Per-day act probability: ``f_early`` below ``early_window`` days of link age, else ``f_late``.

    Accepts a scalar or an array of link ages.
    """
    if np.ndim(link_age) == 0:
        return config.f_early if link_age < config.early_window else config.f_late
    return np.where(np.asarray(link_age) < config.early_window, config.f_early, config.f_late)


def transmission_step(
    network: ContactNetwork,
    state: EpidemicState,
    config: EpidemicConfig,
    rng: np.random.Generator,
    day: int,
) -> np.ndarray:
    """
    One day of transmission across discordant links.

    Each discordant link has an act with probability
    :func:`coital_act_probability`, and an act infects the susceptible
    partner with probability ``beta``. All infections apply together after
    every link is evaluated.

    Returns:
        Ascending ids of the newly infected.
    """
    if network.link_count == 0:
        return np.empty(0, dtype=np.int64)

    females, males, created = network.link_arrays()
    comp_f = state.compartments[females]
    comp_m = state.compartments[males]
    infected_f = (comp_f == Compartment.INFECTED) & (comp_m == Compartment.SUSCEPTIBLE)
    infected_m = (comp_m == Compartment.INFECTED) & (comp_f == Compartment.SUSCEPTIBLE)
    discordant = infected_f | infected_m
    k = int(np.count_nonzero(discordant))
    if k == 0:
        return np.empty(0, dtype=np.int64)

    p_act = coital_act_probability(day - created[discordant], config)
    act = rng.random(k) < p_act
    transmit = rng.random(k) < config.beta
    hit = act & transmit

    targets = np.where(infected_f[discordant], males[discordant], females[discordant])
    new_ids = np.unique(targets[hit])
    state.infect(new_ids, day, rng)
    return new_ids


def clearance_step(
    state: EpidemicState,
    config: EpidemicConfig,
    rng: np.random.Generator,
    day: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Clear every infection due by ``day``.

    A clearing person becomes Recovered with their gender's immunity
    probability and Susceptible otherwise.

    Returns:
        ``(recovered_ids, resusceptible_ids)``, both ascending.
    """
    due = np.flatnonzero(state.mask(Compartment.INFECTED) & (state.clearance_at <= day))
    if due.size == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    rho = np.where(state.genders[due] == FEMALE, config.rho_female, config.rho_male)
    immune = rng.random(due.size) < rho
    recovered, resusceptible = due[immune], due[~immune]
    state.end_infection(recovered, Compartment.RECOVERED)
    state.end_infection(resusceptible, Compartment.SUSCEPTIBLE)
    return recovered, resusceptible


def run_day(
    network: ContactNetwork,
    state: EpidemicState,
    config: EpidemicConfig,
    vaccination_hook: Optional[VaccinationHook],
    rng: np.random.Generator,
    day: int,
    growth_rng: Optional[np.random.Generator] = None,
) -> DailyCounts:
    """
    Advance network and epidemic by one day.

    ``growth_rng`` drives network growth when given, otherwise ``rng`` is used
    for both growth and transmission.
    """
    if day < 1:
        raise ContractViolationError(f"simulated days start at 1, got {day}")
    grow_step(network, day, growth_rng if growth_rng is not None else rng)
    new_ids = transmission_step(network, state, config, rng, day)
    clearance_step(state, config, rng, day)
    if vaccination_hook is not None and day in vaccination_hook.session_days:
        vaccination_hook(network, state, day)
    return state.tally(day, new_ids)

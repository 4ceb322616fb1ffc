"""
Vaccination plans, eligibility and the eight selection strategies.

A :class:`VaccinationCampaign` is the per-run hook the epidemic engine
calls on session days. It recomputes centralities on the network as it
stands that day, picks recipients and keeps an audit trail.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from seconet.analysis.centrality import (
    CentralityScores,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    percolation_centrality,
)
from seconet.config.schema import CentralityConfig, VaccinationConfig
from seconet.constants import (
    CENTRALITY_STRATEGIES,
    LOGGER_NAME,
    STRATEGIES,
    STRATEGY_AGE,
    STRATEGY_BETWEENNESS,
    STRATEGY_CLOSENESS,
    STRATEGY_DEGREE,
    STRATEGY_EIGENVECTOR,
    STRATEGY_NONE,
    STRATEGY_PERCOLATION,
    STRATEGY_RING,
)
from seconet.core.network import ContactNetwork
from seconet.core.population import Population
from seconet.epidemic.engine import Compartment, EpidemicState
from seconet.exceptions import ConfigurationError, ContractViolationError

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class VaccinationPlan:
    strategy: str
    session_days: Tuple[int, ...]
    total_doses: int
    doses_per_session: Tuple[int, ...]
    age_cutoff: int
    restrict_under_26: bool = False
    proportional_selection: bool = False

    def doses_on(self, day: int) -> int:
        """Budget of the session held on ``day`` (0 when no session)."""
        try:
            return self.doses_per_session[self.session_days.index(day)]
        except ValueError:
            return 0


@dataclass(frozen=True)
class AuditEntry:
    day: int
    strategy: str
    doses_available: int
    doses_used: int
    chosen_ids: Tuple[int, ...]


def build_plan(population: Population, strategy: str, config: VaccinationConfig) -> VaccinationPlan:
    """
    Budget ``floor(coverage * #people under the age cutoff)`` doses and split
    them evenly over the sessions, the remainder going one each to the
    earliest sessions.
    """
    if strategy not in STRATEGIES:
        raise ConfigurationError(f"unknown strategy {strategy!r}; valid: {', '.join(STRATEGIES)}")

    young = int(np.count_nonzero(population.ages < config.age_cutoff))
    # Fraction keeps the floor exact for decimal coverages
    total = math.floor(Fraction(repr(config.coverage_fraction)) * young)
    sessions = len(config.session_days)
    base, remainder = divmod(total, sessions) if sessions else (0, 0)
    per_session = tuple(base + (1 if k < remainder else 0) for k in range(sessions))

    plan = VaccinationPlan(
        strategy=strategy,
        session_days=tuple(config.session_days),
        total_doses=total if sessions else 0,
        doses_per_session=per_session,
        age_cutoff=config.age_cutoff,
        restrict_under_26=config.restrict_under_26,
        proportional_selection=config.proportional_selection,
    )
    logger.debug("Plan %s: %d doses over sessions %s", strategy, plan.total_doses, per_session)
    return plan


# ===== Eligibility =====


def eligible(person: int, state: EpidemicState, network: ContactNetwork, plan: VaccinationPlan) -> bool:
    """Susceptible, ever linked, and under the age cutoff when the strategy or plan demands it."""
    pop = network.population
    if state.compartments[person] != Compartment.SUSCEPTIBLE or not pop.ever_linked[person]:
        return False
    young = pop.ages[person] < plan.age_cutoff
    if plan.strategy == STRATEGY_AGE and not young:
        return False
    return young or not plan.restrict_under_26


def eligible_ids(state: EpidemicState, network: ContactNetwork, plan: VaccinationPlan) -> np.ndarray:
    """Vectorised :func:`eligible` over the whole population (ascending ids)."""
    pop = network.population
    mask = state.mask(Compartment.SUSCEPTIBLE) & pop.ever_linked
    if plan.strategy == STRATEGY_AGE or plan.restrict_under_26:
        mask &= pop.ages < plan.age_cutoff
    return np.flatnonzero(mask)


# ===== Selection =====


def select_age_based(eligibles: np.ndarray, doses: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random subset of ``min(doses, len(eligibles))`` eligibles."""
    eligibles = np.asarray(eligibles, dtype=np.int64)
    k = min(doses, eligibles.size)
    if k <= 0:
        return np.empty(0, dtype=np.int64)
    return np.sort(rng.choice(eligibles, size=k, replace=False))


def select_ring(
    network: ContactNetwork,
    state: EpidemicState,
    eligibles: np.ndarray,
    doses: int,
) -> np.ndarray:
    """
    Eligible neighbours of infected people, hubs first.

    Infected people are visited by degree (descending, then id ascending);
    each contributes their eligible neighbours in ascending id until the
    doses run out.
    """
    chosen: List[int] = []
    if doses <= 0:
        return np.empty(0, dtype=np.int64)
    infected = state.ids(Compartment.INFECTED)
    allowed = set(int(i) for i in eligibles)
    taken = set()
    order = infected[np.lexsort((infected, -network.degrees[infected]))]
    for i in order:
        for nb in network.neighbors(int(i)):
            if nb in allowed and nb not in taken:
                taken.add(nb)
                chosen.append(nb)
                if len(chosen) == doses:
                    return np.array(chosen, dtype=np.int64)
    return np.array(chosen, dtype=np.int64)


def rank_by_score(ids: np.ndarray, scores: np.ndarray) -> np.ndarray:
    """``ids`` ordered by score descending, ties by ascending id."""
    return ids[np.lexsort((ids, -scores))]


def select_by_centrality(
    scores: CentralityScores,
    eligibles: np.ndarray,
    doses: int,
    day: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    proportional: bool = False,
) -> np.ndarray:
    """
    Top ``doses`` eligibles by score.

    With ``proportional`` the draw is random without replacement, each
    eligible weighted by its score; once no positive score remains the rest
    are filled by rank.

    Raises:
        ContractViolationError: ``scores`` were computed on another day than ``day``
    """
    if day is not None and scores.computed_at != day:
        raise ContractViolationError(
            f"{scores.kind.value} scores from day {scores.computed_at} used on session day {day}"
        )
    eligibles = np.asarray(eligibles, dtype=np.int64)
    k = min(doses, eligibles.size)
    if k <= 0:
        return np.empty(0, dtype=np.int64)

    lookup = dict(zip(scores.node_ids.tolist(), scores.values.tolist()))
    values = np.array([lookup.get(int(i), 0.0) for i in eligibles], dtype=np.float64)
    ranked = rank_by_score(eligibles, values)
    if not proportional:
        return ranked[:k]

    if rng is None:
        raise ContractViolationError("proportional selection needs a random generator")
    positive = np.count_nonzero(values > 0)
    drawn = np.empty(0, dtype=np.int64)
    if positive:
        drawn = rng.choice(eligibles, size=min(k, positive), replace=False, p=values / values.sum())
    picked = set(drawn.tolist())
    rest = [i for i in ranked if int(i) not in picked][: k - drawn.size]
    return np.concatenate([drawn, np.asarray(rest, dtype=np.int64)])


def apply_vaccination(state: EpidemicState, chosen: Sequence[int]) -> None:
    """Move every chosen person to Vaccinated. All must be Susceptible."""
    state.vaccinate(np.asarray(chosen, dtype=np.int64))


# ===== Per-session driver =====


def compute_scores(
    strategy: str,
    network: ContactNetwork,
    state: EpidemicState,
    config: Optional[CentralityConfig] = None,
) -> CentralityScores:
    """Centrality behind a centrality strategy, on the network as it stands today."""
    config = config or CentralityConfig()
    if strategy == STRATEGY_DEGREE:
        return degree_centrality(network)
    if strategy == STRATEGY_BETWEENNESS:
        return betweenness_centrality(network)
    if strategy == STRATEGY_CLOSENESS:
        return closeness_centrality(network)
    if strategy == STRATEGY_PERCOLATION:
        chi = state.mask(Compartment.INFECTED).astype(np.float64)
        return percolation_centrality(network, chi)
    if strategy == STRATEGY_EIGENVECTOR:
        return eigenvector_centrality(network, config.eigen_tolerance, config.eigen_max_iterations)
    raise ConfigurationError(f"{strategy!r} is not a centrality strategy")


@dataclass
class VaccinationCampaign:
    """Hook run by the epidemic engine on each session day of ``plan``."""

    plan: VaccinationPlan
    rng: np.random.Generator
    centrality: CentralityConfig = field(default_factory=CentralityConfig)
    keep_scores: bool = False
    audit: List[AuditEntry] = field(default_factory=list)
    scores: List[CentralityScores] = field(default_factory=list)
    on_session: Optional[Callable[[AuditEntry], None]] = None

    @property
    def session_days(self) -> Tuple[int, ...]:
        return self.plan.session_days

    @property
    def doses_used(self) -> int:
        return sum(entry.doses_used for entry in self.audit)

    def select(self, network: ContactNetwork, state: EpidemicState, day: int) -> np.ndarray:
        plan = self.plan
        doses = plan.doses_on(day)
        if plan.strategy == STRATEGY_NONE or doses == 0:
            return np.empty(0, dtype=np.int64)

        eligibles = eligible_ids(state, network, plan)
        if plan.strategy == STRATEGY_AGE:
            return select_age_based(eligibles, doses, self.rng)
        if plan.strategy == STRATEGY_RING:
            return select_ring(network, state, eligibles, doses)
        if plan.strategy in CENTRALITY_STRATEGIES:
            scores = compute_scores(plan.strategy, network, state, self.centrality)
            if self.keep_scores:
                self.scores.append(scores)
            return select_by_centrality(
                scores, eligibles, doses, day=day, rng=self.rng, proportional=plan.proportional_selection
            )
        raise ConfigurationError(f"unknown strategy {plan.strategy!r}")

    def __call__(self, network: ContactNetwork, state: EpidemicState, day: int) -> None:
        chosen = self.select(network, state, day)
        apply_vaccination(state, chosen)
        entry = AuditEntry(
            day=day,
            strategy=self.plan.strategy,
            doses_available=self.plan.doses_on(day),
            doses_used=int(chosen.size),
            chosen_ids=tuple(int(i) for i in chosen),
        )
        self.audit.append(entry)
        logger.debug(
            "Session day %d (%s): %d/%d doses used",
            day, entry.strategy, entry.doses_used, entry.doses_available,
        )
        if self.on_session is not None:
            self.on_session(entry)

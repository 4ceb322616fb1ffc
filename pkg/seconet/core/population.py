"""
Population sampling and partner fitness.

The population is stored column-wise (one numpy array per attribute) so the
fitness of every candidate partner can be evaluated in one vectorised call.
:class:`Person` is a read-only row view for callers that want one individual.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from seconet.config.schema import GrowthConfig
from seconet.constants import AGE_BUCKETS, FEMALE, LOGGER_NAME, MALE
from seconet.exceptions import ConfigurationError

logger = logging.getLogger(LOGGER_NAME)

NOT_JOINED = -1


@dataclass(frozen=True)
class Person:
    """One individual.

    ``gender`` is +1 for female and -1 for male. ``join_time`` is ``None``
    until the person enters the network.
    """

    id: int
    age: int
    gender: int
    mean_rel_duration: float
    lsp: int
    join_time: Optional[int] = None
    ever_linked: bool = False


class Population:
    """Column store of every person in the simulation.

    Identity is fixed at construction: no person is added or removed later.
    Only ``join_time`` and ``ever_linked`` change, and ``ever_linked`` only
    ever goes from False to True.
    """

    def __init__(
        self,
        ages: Sequence[int],
        genders: Sequence[int],
        deltas: Sequence[float],
        lsp: Sequence[int],
    ):
        self.ages = np.asarray(ages, dtype=np.int64)
        self.genders = np.asarray(genders, dtype=np.int64)
        self.deltas = np.asarray(deltas, dtype=np.float64)
        self.lsp = np.asarray(lsp, dtype=np.int64)
        n = self.ages.shape[0]
        if not (self.genders.shape[0] == self.deltas.shape[0] == self.lsp.shape[0] == n):
            raise ConfigurationError("population columns have different lengths")
        if not np.all(np.isin(self.genders, (FEMALE, MALE))):
            raise ConfigurationError("gender must be +1 (female) or -1 (male)")
        if np.any(self.deltas <= 0) or np.any(self.lsp < 1):
            raise ConfigurationError("mean relationship durations must be > 0 and lsp >= 1")
        self.join_time = np.full(n, NOT_JOINED, dtype=np.int64)
        self.ever_linked = np.zeros(n, dtype=bool)

    @classmethod
    def from_persons(cls, persons: Iterable[Person]) -> "Population":
        """Build a population from explicit rows (ids must be 0..n-1 in order)."""
        rows = sorted(persons, key=lambda p: p.id)
        if [p.id for p in rows] != list(range(len(rows))):
            raise ConfigurationError("person ids must be the contiguous range 0..n-1")
        pop = cls(
            [p.age for p in rows],
            [p.gender for p in rows],
            [p.mean_rel_duration for p in rows],
            [p.lsp for p in rows],
        )
        for p in rows:
            if p.join_time is not None:
                pop.join_time[p.id] = p.join_time
            pop.ever_linked[p.id] = p.ever_linked
        return pop

    def __len__(self) -> int:
        return int(self.ages.shape[0])

    def __getitem__(self, i: int) -> Person:
        jt = int(self.join_time[i])
        return Person(
            id=int(i),
            age=int(self.ages[i]),
            gender=int(self.genders[i]),
            mean_rel_duration=float(self.deltas[i]),
            lsp=int(self.lsp[i]),
            join_time=None if jt == NOT_JOINED else jt,
            ever_linked=bool(self.ever_linked[i]),
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    # ===== Join bookkeeping =====

    @property
    def joined_mask(self) -> np.ndarray:
        return self.join_time != NOT_JOINED

    def joined_ids(self) -> np.ndarray:
        return np.flatnonzero(self.joined_mask)

    def unjoined_ids(self) -> np.ndarray:
        return np.flatnonzero(~self.joined_mask)

    def is_joined(self, i: int) -> bool:
        return bool(self.join_time[i] != NOT_JOINED)

    def mark_joined(self, i: int, day: int) -> None:
        if self.join_time[i] == NOT_JOINED:
            self.join_time[i] = day

    def mark_linked(self, i: int) -> None:
        self.ever_linked[i] = True


def sample_population(config: GrowthConfig, rng: np.random.Generator) -> Population:
    """
    Draw ``config.population_size`` individuals.

    Ages come from the nine five-year buckets (uniform inside a bucket),
    gender is female with probability ``female_fraction``, the mean
    relationship duration is Gamma(mean=mean_delta, shape=gamma_shape) and the
    lifetime-partner estimate is ``round(T / delta)`` clamped to at least 1.

    Args:
        config: Validated growth configuration
        rng:    Seeded generator (consumed in a fixed order)

    Returns:
        A Population with nobody joined yet.
    """
    if not isinstance(config, GrowthConfig):
        raise ConfigurationError(f"expected GrowthConfig, got {type(config).__name__}")

    n = config.population_size
    weights = np.asarray(config.age_distribution, dtype=np.float64)
    weights = weights / weights.sum()

    buckets = rng.choice(len(AGE_BUCKETS), size=n, p=weights)
    lows = np.array([lo for lo, _ in AGE_BUCKETS], dtype=np.int64)
    highs = np.array([hi for _, hi in AGE_BUCKETS], dtype=np.int64)
    ages = rng.integers(lows[buckets], highs[buckets] + 1)

    genders = np.where(rng.random(n) < config.female_fraction, FEMALE, MALE)

    scale = config.mean_delta / config.gamma_shape
    deltas = rng.gamma(config.gamma_shape, scale, size=n)
    # a zero draw is possible in floating point; keep the positivity invariant
    deltas = np.maximum(deltas, np.finfo(np.float64).tiny)

    lsp = np.maximum(1, np.rint(config.horizon / deltas)).astype(np.int64)

    logger.debug(
        "Sampled population: N=%d, females=%d, mean delta=%.2f",
        n, int(np.sum(genders == FEMALE)), float(deltas.mean()),
    )
    return Population(ages, genders, deltas, lsp)


def fitness(i: Person, j: Person, mean_age_gap: float) -> float:
    """
    Attractiveness of ``j`` as a partner for ``i``.

    ``|b_i - b_j| / (max(<eta>, |g_i - g_j|) * max(1, |lsp_i - lsp_j|))``;
    zero for same-gender pairs.
    """
    gender_gap = abs(i.gender - j.gender)
    if gender_gap == 0:
        return 0.0
    age_term = max(mean_age_gap, abs(i.age - j.age))
    lsp_term = max(1, abs(i.lsp - j.lsp))
    return gender_gap / (age_term * lsp_term)


def fitness_to(
    population: Population,
    i: int,
    candidates: np.ndarray,
    mean_age_gap: float,
) -> np.ndarray:
    """Vectorised :func:`fitness` of every id in ``candidates`` as partner of ``i``."""
    gender_gap = np.abs(population.genders[i] - population.genders[candidates]).astype(np.float64)
    age_term = np.maximum(mean_age_gap, np.abs(population.ages[i] - population.ages[candidates]))
    lsp_term = np.maximum(1, np.abs(population.lsp[i] - population.lsp[candidates]))
    return gender_gap / (age_term * lsp_term)

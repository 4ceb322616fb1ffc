"""
Contact network state: active relationships, adjacency and growth phase.

Links are keyed by ``(female_id, male_id)`` and kept in insertion order, so
every pass over the active links is reproducible for a given seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from seconet.config.schema import GrowthConfig
from seconet.constants import FEMALE, LOGGER_NAME, VIRGIN_AGE_CUTOFF
from seconet.core.population import Person, Population, fitness_to
from seconet.exceptions import ContractViolationError, SeedingError

logger = logging.getLogger(LOGGER_NAME)

LinkKey = Tuple[int, int]


class LinkKind(str, Enum):
    PRIMARY = "primary"
    SECONDARY = "secondary"


class Phase(Enum):
    GROWING = 1
    STEADY = 2


@dataclass(frozen=True)
class Relationship:
    """An active link. ``female`` and ``male`` are person ids."""

    female: int
    male: int
    created_at: int
    expected_duration: float
    kind: LinkKind

    @property
    def key(self) -> LinkKey:
        return (self.female, self.male)

    def age(self, day: int) -> int:
        return day - self.created_at

    def is_expired(self, day: int) -> bool:
        return (day - self.created_at) >= self.expected_duration


class ContactNetwork:
    """
    The evolving bipartite graph plus growth-phase bookkeeping.

    ``frozen_link_count`` (M) is ``None`` during the growing phase and is
    set once, at the step on which the last person joins. The running sum
    and count of expected durations cover every link ever created.
    """

    def __init__(self, population: Population, config: GrowthConfig):
        self.population = population
        self.config = config
        self.links: Dict[LinkKey, Relationship] = {}
        self.adjacency: List[Set[int]] = [set() for _ in range(len(population))]
        self.degrees = np.zeros(len(population), dtype=np.int64)
        self.phase = Phase.GROWING
        self.frozen_link_count: Optional[int] = None
        self.steady_since: Optional[int] = None
        self.current_day = 0
        self.created_count = 0
        self.created_duration_sum = 0.0

    # ===== Queries =====

    @property
    def size(self) -> int:
        return len(self.population)

    @property
    def link_count(self) -> int:
        return len(self.links)

    def degree(self, i: int) -> int:
        return int(self.degrees[i])

    def neighbors(self, i: int) -> List[int]:
        return sorted(self.adjacency[i])

    def _key(self, i: int, j: int) -> LinkKey:
        return (i, j) if self.population.genders[i] == FEMALE else (j, i)

    def has_link(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def iter_links(self) -> Iterator[Relationship]:
        return iter(list(self.links.values()))

    def link_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return ``(females, males, created_at)`` of every active link, in link order."""
        n = len(self.links)
        females = np.fromiter((k[0] for k in self.links), dtype=np.int64, count=n)
        males = np.fromiter((k[1] for k in self.links), dtype=np.int64, count=n)
        created = np.fromiter((r.created_at for r in self.links.values()), dtype=np.int64, count=n)
        return females, males, created

    def durations(self) -> np.ndarray:
        return np.fromiter(
            (r.expected_duration for r in self.links.values()),
            dtype=np.float64,
            count=len(self.links),
        )

    # ===== Mutation =====

    def add_link(
        self,
        i: int,
        j: int,
        day: int,
        duration: float,
        kind: LinkKind,
    ) -> Relationship:
        """Create a link between ``i`` and ``j``; both are marked ever-linked."""
        genders = self.population.genders
        if genders[i] == genders[j]:
            raise ContractViolationError(f"same-gender link {i}-{j} rejected")
        if j in self.adjacency[i]:
            raise ContractViolationError(f"duplicate link {i}-{j} rejected")
        if duration <= 0:
            raise ContractViolationError(f"link {i}-{j} needs a positive duration, got {duration}")

        female, male = self._key(i, j)
        rel = Relationship(female, male, day, float(duration), kind)
        self.links[rel.key] = rel
        self.adjacency[i].add(j)
        self.adjacency[j].add(i)
        self.degrees[i] += 1
        self.degrees[j] += 1
        self.created_count += 1
        self.created_duration_sum += rel.expected_duration
        self.population.mark_linked(i)
        self.population.mark_linked(j)
        return rel

    def remove_link(self, key: LinkKey) -> Relationship:
        rel = self.links.pop(key)
        self.adjacency[rel.female].discard(rel.male)
        self.adjacency[rel.male].discard(rel.female)
        self.degrees[rel.female] -= 1
        self.degrees[rel.male] -= 1
        return rel

    def enter_steady_phase(self, day: int) -> None:
        self.phase = Phase.STEADY
        self.frozen_link_count = self.link_count
        self.steady_since = day
        logger.info("Growth phase ended on day %d, M=%d active links", day, self.link_count)

    # ===== Audits and exports =====

    def assert_bipartite(self) -> None:
        """Raise ContractViolationError if any active link joins two people of the same gender."""
        genders = self.population.genders
        for female, male in self.links:
            if genders[female] == genders[male]:
                raise ContractViolationError(f"same-gender link {female}-{male} on day {self.current_day}")

    def to_networkx(self) -> nx.Graph:
        """Snapshot of the joined part of the network as an undirected networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(int(i) for i in self.population.joined_ids())
        graph.add_edges_from(self.links.keys())
        return graph

    def edge_rows(self) -> List[list]:
        return [
            [r.female, r.male, r.created_at, r.expected_duration, r.kind.value]
            for r in self.links.values()
        ]

    def node_rows(self) -> List[list]:
        pop = self.population
        return [
            [p.id, p.age, p.gender, p.mean_rel_duration, p.lsp, p.join_time]
            for p in pop
        ]


def sample_relationship_duration(i: Person, j: Person, rng: np.random.Generator) -> float:
    """Draw an expected duration from Exp(mean = min(delta_i, delta_j))."""
    mean = min(i.mean_rel_duration, j.mean_rel_duration)
    # exponential support is (0, inf) but a float draw can underflow to 0
    return max(float(rng.exponential(mean)), np.finfo(np.float64).tiny)


def seed_links(network: ContactNetwork, m0: int, rng: np.random.Generator) -> None:
    """
    Create ``m0`` monogamous links among adults at day 0.

    Each round draws an unseeded adult uniformly and pairs them with an
    unseeded adult chosen with probability proportional to pure fitness.

    Raises:
        SeedingError: when no candidate with positive fitness remains
    """
    if network.link_count:
        raise SeedingError("seed_links requires an empty network")
    if m0 == 0:
        return

    pop = network.population
    eta = network.config.mean_age_gap
    available = pop.ages >= VIRGIN_AGE_CUTOFF

    for round_no in range(m0):
        pool = np.flatnonzero(available)
        if pool.size < 2:
            raise SeedingError(
                f"only {pool.size} unseeded adults left after {round_no} of {m0} seed links"
            )
        i = int(rng.choice(pool))
        candidates = pool[pool != i]
        phi = fitness_to(pop, i, candidates, eta)
        total = phi.sum()
        if total <= 0:
            raise SeedingError(
                f"no opposite-gender adult available for person {i} "
                f"(seed link {round_no + 1} of {m0})"
            )
        j = int(rng.choice(candidates, p=phi / total))

        duration = sample_relationship_duration(pop[i], pop[j], rng)
        network.add_link(i, j, 0, duration, LinkKind.PRIMARY)
        pop.mark_joined(i, 0)
        pop.mark_joined(j, 0)
        available[i] = available[j] = False

    logger.debug("Seeded %d links among %d adults", m0, 2 * m0)


def remove_expired_links(network: ContactNetwork, t: int) -> int:
    """Drop every link whose age has reached its expected duration. Returns the count."""
    expired = [key for key, rel in network.links.items() if rel.is_expired(t)]
    for key in expired:
        network.remove_link(key)
    return len(expired)


def removal_rate(network: ContactNetwork) -> float:
    """
    1 / mean expected duration of every link created so far; 0 when no link is active.

    At this rate ``M * theta`` new links a day balance expiry, so the steady
    link count stays near M.
    """
    if not network.links or network.created_duration_sum <= 0:
        return 0.0
    return network.created_count / network.created_duration_sum

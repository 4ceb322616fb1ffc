"""
Network growth: joining new people, forming secondary links and the
per-step driver that moves the network from the growing to the steady phase.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from seconet.config.schema import GrowthConfig
from seconet.constants import LOGGER_NAME
from seconet.core.network import (
    ContactNetwork,
    LinkKind,
    Phase,
    remove_expired_links,
    removal_rate,
    sample_relationship_duration,
    seed_links,
)
from seconet.core.population import fitness_to, sample_population
from seconet.exceptions import ContractViolationError

logger = logging.getLogger(LOGGER_NAME)


def attachment_probabilities(
    degrees: np.ndarray,
    fitness_values: np.ndarray,
    fitness_floor: float,
) -> np.ndarray:
    """
    Selection probabilities ``q_j = (k_j + eps) * phi_j / sum_h (k_h + eps) * phi_h``.

    Returns all zeros when no candidate has positive weight.
    """
    weights = (np.asarray(degrees, dtype=np.float64) + fitness_floor) * np.asarray(
        fitness_values, dtype=np.float64
    )
    total = weights.sum()
    if total <= 0:
        return np.zeros_like(weights)
    return weights / total


def introduce_nodes(
    network: ContactNetwork,
    n: int,
    m: int,
    fitness_floor: float,
    rng: np.random.Generator,
    day: Optional[int] = None,
) -> int:
    """
    Bring up to ``n`` unjoined people into the network.

    Each joiner links to ``m`` distinct people who had joined before this
    step, drawn without replacement by degree-weighted fitness. A joiner whose
    candidate pool has fewer than ``m`` positive weights gets fewer links.

    Returns:
        Number of links created.
    """
    if network.phase is not Phase.GROWING:
        raise ContractViolationError("introduce_nodes called after the growing phase ended")
    day = network.current_day if day is None else day
    pop = network.population
    unjoined = pop.unjoined_ids()
    if n <= 0 or unjoined.size == 0:
        return 0

    joiners = rng.choice(unjoined, size=min(n, unjoined.size), replace=False)
    existing = pop.joined_ids()
    eta = network.config.mean_age_gap
    created = 0
    short = 0

    for i in joiners:
        i = int(i)
        links = 0
        if existing.size:
            q = attachment_probabilities(
                network.degrees[existing], fitness_to(pop, i, existing, eta), fitness_floor
            )
            k = min(m, int(np.count_nonzero(q)))
            if k:
                for j in rng.choice(existing, size=k, replace=False, p=q):
                    j = int(j)
                    duration = sample_relationship_duration(pop[i], pop[j], rng)
                    network.add_link(i, j, day, duration, LinkKind.PRIMARY)
                links = k
        pop.mark_joined(i, day)
        created += links
        if links < m:
            short += 1

    if short:
        logger.info("Day %d: %d of %d joiners got fewer than %d links", day, short, joiners.size, m)
    return created


def secondary_link_target(network: ContactNetwork, day: int, theta: Optional[float] = None) -> int:
    """
    Number of secondary links to form on ``day``.

    Growing phase: ``round((n*m*t + m0) * theta)``; steady phase:
    ``round(M * theta)``. Python's ``round`` breaks halves to even.
    """
    theta = removal_rate(network) if theta is None else theta
    if theta <= 0:
        return 0
    cfg = network.config
    if network.phase is Phase.GROWING:
        base = cfg.joins_per_step * cfg.links_per_join * day + cfg.initial_links
    else:
        base = network.frozen_link_count or 0
    return int(round(base * theta))


def form_secondary_links(
    network: ContactNetwork,
    rng: np.random.Generator,
    day: Optional[int] = None,
) -> int:
    """
    Create secondary links between people already in the network.

    A uniformly drawn joined person picks a partner among joined people
    they are not yet linked to. Draws without any valid partner are retried
    up to ``secondary_retries`` times before that link is skipped.

    Returns:
        Number of links created.
    """
    day = network.current_day if day is None else day
    target = secondary_link_target(network, day)
    if target == 0:
        return 0

    pop = network.population
    cfg = network.config
    joined_mask = pop.joined_mask
    joined = np.flatnonzero(joined_mask)
    created = 0
    skipped = 0

    for _ in range(target):
        for _attempt in range(cfg.secondary_retries):
            i = int(rng.choice(joined))
            mask = joined_mask.copy()
            mask[i] = False
            for nb in network.adjacency[i]:
                mask[nb] = False
            candidates = np.flatnonzero(mask)
            if candidates.size == 0:
                continue
            q = attachment_probabilities(
                network.degrees[candidates],
                fitness_to(pop, i, candidates, cfg.mean_age_gap),
                cfg.fitness_floor,
            )
            if not q.any():
                continue
            j = int(rng.choice(candidates, p=q))
            duration = sample_relationship_duration(pop[i], pop[j], rng)
            network.add_link(i, j, day, duration, LinkKind.SECONDARY)
            created += 1
            break
        else:
            skipped += 1

    if skipped:
        logger.info(
            "Day %d: skipped %d of %d secondary links after %d retries",
            day, skipped, target, cfg.secondary_retries,
        )
    return created


def grow_step(network: ContactNetwork, t: int, rng: np.random.Generator) -> None:
    """
    Advance the network to day ``t``.

    Order is fixed: join new people (growing phase only), drop expired links,
    form secondary links. The phase switches to steady at the end of the
    step on which the last person joined, freezing M.
    """
    if t <= network.current_day:
        raise ContractViolationError(f"grow_step day {t} does not advance past day {network.current_day}")
    network.current_day = t
    cfg = network.config

    if network.phase is Phase.GROWING:
        introduce_nodes(network, cfg.joins_per_step, cfg.links_per_join, cfg.fitness_floor, rng, t)
    removed = remove_expired_links(network, t)
    formed = form_secondary_links(network, rng, t)

    if network.phase is Phase.GROWING and network.population.unjoined_ids().size == 0:
        network.enter_steady_phase(t)

    logger.debug("Day %d: -%d +%d links, %d active", t, removed, formed, network.link_count)


def build_network(config: GrowthConfig, rng: np.random.Generator) -> ContactNetwork:
    """Sample a population and seed the day-0 links."""
    population = sample_population(config, rng)
    network = ContactNetwork(population, config)
    seed_links(network, config.initial_links, rng)
    return network


def grow_network(
    config: GrowthConfig,
    rng: np.random.Generator,
    days: Optional[int] = None,
    audit: bool = False,
) -> ContactNetwork:
    """
    Grow a network from scratch for ``days`` steps (default: the horizon).

    With ``audit`` the bipartite check runs after every step.
    """
    network = build_network(config, rng)
    horizon = config.horizon if days is None else days
    for t in range(1, horizon + 1):
        grow_step(network, t, rng)
        if audit:
            network.assert_bipartite()
    return network

"""
One complete run: grow a network, seed the epidemic and simulate every day
of the horizon under one vaccination strategy.

Each run draws from three independent random streams (growth, epidemic,
vaccination) spawned from ``(seed, sweep_id)``. The strategy never enters
the seed, so every strategy sees the same network and the same seeded
infections for a given seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from seconet.config.schema import ScenarioConfig, SweepPoint
from seconet.constants import LOGGER_NAME, STRATEGIES
from seconet.core.growth import build_network
from seconet.core.network import ContactNetwork
from seconet.epidemic.engine import DailyCounts, EpidemicState, run_day, seed_infection
from seconet.exceptions import ConfigurationError
from seconet.vaccination.strategies import VaccinationCampaign, build_plan

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class RandomStreams:
    growth: np.random.Generator
    epidemic: np.random.Generator
    vaccination: np.random.Generator


def derive_streams(seed: int, sweep_id: int = 0) -> RandomStreams:
    """Spawn the three per-run generators from ``(seed, sweep_id)``."""
    children = np.random.SeedSequence(seed, spawn_key=(sweep_id,)).spawn(3)
    return RandomStreams(*(np.random.default_rng(child) for child in children))


@dataclass
class SimulationResult:
    strategy: str
    seed: int
    sweep_id: int
    series: List[DailyCounts]
    network: ContactNetwork
    state: EpidemicState
    campaign: VaccinationCampaign


def run_simulation(
    scenario: ScenarioConfig,
    strategy: str,
    seed: int,
    sweep_id: int = 0,
    point: Optional[SweepPoint] = None,
    keep_scores: bool = False,
    audit_growth: bool = False,
) -> SimulationResult:
    """
    Run days 0..T for one (scenario, strategy, seed).

    Args:
        scenario:     Validated scenario
        strategy:     One of the eight strategy names
        seed:         Run seed
        sweep_id:     Index of the sweep point (also part of the stream seed)
        point:        Growth overrides; defaults to ``scenario.sweep[sweep_id]``
        keep_scores:  Keep every centrality score vector computed at sessions
        audit_growth: Check bipartiteness after every growth step

    Returns:
        SimulationResult whose series has one row per day, day 0 included.

    Raises:
        ConfigurationError: before day 1, for an unknown strategy or sweep id
    """
    if strategy not in STRATEGIES:
        raise ConfigurationError(f"unknown strategy {strategy!r}; valid: {', '.join(STRATEGIES)}")
    if point is None:
        if not 0 <= sweep_id < len(scenario.sweep):
            raise ConfigurationError(f"sweep id {sweep_id} out of range (0..{len(scenario.sweep) - 1})")
        point = scenario.sweep[sweep_id]

    growth = scenario.growth_for(point)
    streams = derive_streams(seed, sweep_id)

    network = build_network(growth, streams.growth)
    state = seed_infection(network.population, scenario.epidemic, streams.epidemic)
    plan = build_plan(network.population, strategy, scenario.vaccination)
    campaign = VaccinationCampaign(plan, streams.vaccination, scenario.centrality, keep_scores=keep_scores)

    series = [state.tally(0)]
    for day in range(1, growth.horizon + 1):
        counts = run_day(
            network, state, scenario.epidemic, campaign, streams.epidemic, day, growth_rng=streams.growth
        )
        if audit_growth:
            network.assert_bipartite()
        series.append(counts)

    logger.info(
        "Run done: sweep=%d strategy=%s seed=%d links=%d doses=%d/%d",
        sweep_id, strategy, seed, network.link_count, campaign.doses_used, plan.total_doses,
    )
    return SimulationResult(strategy, seed, sweep_id, series, network, state, campaign)

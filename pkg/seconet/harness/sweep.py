"""
Replicated runs over sweep points and strategies.

Every (sweep point, strategy, replicate) is an independent task. Tasks run
through joblib and the records are sorted canonically afterwards, so the
result does not depend on the worker count or completion order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from typing import Iterable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from seconet.analysis.topology import TopologySummary, summarize
from seconet.config.schema import ScenarioConfig
from seconet.constants import LOGGER_NAME, SUMMARY_COLUMNS
from seconet.exceptions import ConfigurationError
from seconet.harness.metrics import EpidemicMetrics, compute_metrics
from seconet.harness.simulation import run_simulation

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class SummaryRecord:
    """One summary row. Metric fields are ``None`` for a failed run."""

    sweep_id: int
    seed: int
    strategy: str
    avg_degree: Optional[float] = None
    gamma: Optional[float] = None
    aspl: Optional[float] = None
    clustering_sq: Optional[float] = None
    clustering_tri: Optional[float] = None
    peak_inc: Optional[int] = None
    peak_day: Optional[int] = None
    cum_inc: Optional[int] = None
    peak_inc_f: Optional[int] = None
    peak_day_f: Optional[int] = None
    cum_inc_f: Optional[int] = None
    peak_inc_m: Optional[int] = None
    peak_day_m: Optional[int] = None
    cum_inc_m: Optional[int] = None
    error: Optional[str] = field(default=None, compare=False)

    @classmethod
    def build(
        cls,
        sweep_id: int,
        seed: int,
        strategy: str,
        topology: TopologySummary,
        metrics: EpidemicMetrics,
    ) -> "SummaryRecord":
        return cls(
            sweep_id=sweep_id,
            seed=seed,
            strategy=strategy,
            avg_degree=topology.average_degree,
            gamma=topology.powerlaw_exponent,
            aspl=topology.avg_shortest_path,
            clustering_sq=topology.clustering_square,
            clustering_tri=topology.clustering_triangle,
            **metrics.to_dict(),
        )

    @property
    def sort_key(self) -> Tuple[int, str, int]:
        return (self.sweep_id, self.strategy, self.seed)

    @property
    def failed(self) -> bool:
        return self.error is not None

    def values(self) -> List[object]:
        """Cells in summary-column order (without ``error``)."""
        return [getattr(self, name) for name in SUMMARY_COLUMNS]

    def get(self, name: str):
        if name not in self.field_names():
            raise KeyError(name)
        return getattr(self, name)

    @classmethod
    def field_names(cls) -> List[str]:
        return [f.name for f in fields(cls)]


def replicate_seeds(base_seed: int, replicates: int) -> List[int]:
    """Seeds ``base, base+1, ..., base+replicates-1``."""
    return [base_seed + r for r in range(replicates)]


def run_task(scenario: ScenarioConfig, sweep_id: int, strategy: str, seed: int) -> SummaryRecord:
    """Run one task; any exception becomes an error record."""
    try:
        result = run_simulation(scenario, strategy, seed, sweep_id=sweep_id)
        topology = summarize(result.network, scenario.topology)
        return SummaryRecord.build(sweep_id, seed, strategy, topology, compute_metrics(result.series))
    except Exception as exc:
        message = getattr(exc, "message", None) or f"{type(exc).__name__}: {exc}"
        logger.warning("Run failed (sweep=%d strategy=%s seed=%d): %s", sweep_id, strategy, seed, message)
        return SummaryRecord(sweep_id=sweep_id, seed=seed, strategy=strategy, error=message)


def sweep_tasks(
    scenario: ScenarioConfig,
    strategies: Optional[Sequence[str]] = None,
) -> List[Tuple[int, str, int]]:
    """All (sweep_id, strategy, seed) triples of the scenario."""
    strategies = list(strategies) if strategies is not None else list(scenario.vaccination.strategies)
    if not strategies:
        raise ConfigurationError("no strategies selected")
    if not scenario.sweep:
        raise ConfigurationError("sweep must contain at least one point")
    seeds = replicate_seeds(scenario.seed, scenario.replicates)
    return [
        (sweep_id, strategy, seed)
        for sweep_id in range(len(scenario.sweep))
        for strategy in strategies
        for seed in seeds
    ]


def sweep(
    scenario: ScenarioConfig,
    strategies: Optional[Sequence[str]] = None,
    parallel: Optional[int] = None,
) -> List[SummaryRecord]:
    """
    Run every (sweep point x strategy x replicate) and return the records,
    sorted by ``(sweep_id, strategy, seed)``.

    Args:
        scenario:   Validated scenario
        strategies: Subset of strategies (defaults to the scenario's list)
        parallel:   Worker count (defaults to ``scenario.parallel``)
    """
    tasks = sweep_tasks(scenario, strategies)
    n_jobs = parallel or scenario.parallel
    logger.info("Sweep: %d tasks on %d worker(s)", len(tasks), n_jobs)

    records: Iterable[SummaryRecord] = Parallel(n_jobs=n_jobs)(
        delayed(run_task)(scenario, sweep_id, strategy, seed) for sweep_id, strategy, seed in tasks
    )
    records = sorted(records, key=lambda r: r.sort_key)

    failed = sum(1 for r in records if r.failed)
    if failed:
        logger.warning("Sweep finished with %d failed run(s) of %d", failed, len(records))
    return records

"""
Statistical comparison of strategies across a finished sweep.

- paired one-sided sign tests of each strategy against a baseline strategy
- Spearman correlation of every topology metric with every epidemic metric
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import binomtest, spearmanr

from seconet.constants import EPI_COLUMNS, LOGGER_NAME, STRATEGY_AGE, STRATEGY_NONE, TOPOLOGY_COLUMNS
from seconet.harness.sweep import SummaryRecord

logger = logging.getLogger(LOGGER_NAME)

# lower is better for every incidence metric
INCIDENCE_METRICS = ["peak_inc", "cum_inc", "peak_inc_f", "cum_inc_f", "peak_inc_m", "cum_inc_m"]


@dataclass(frozen=True)
class SignTest:
    sweep_id: int
    metric: str
    strategy: str
    baseline: str
    n_pairs: int
    better: int
    ties: int
    worse: int
    mean_diff: Optional[float]
    p_value: float

    def values(self) -> List[object]:
        return [
            self.sweep_id, self.metric, self.strategy, self.baseline,
            self.n_pairs, self.better, self.ties, self.worse, self.mean_diff, self.p_value,
        ]


@dataclass(frozen=True)
class Correlation:
    strategy: str
    topology_metric: str
    epi_metric: str
    n: int
    spearman_rho: Optional[float]
    p_value: Optional[float]

    def values(self) -> List[object]:
        return [self.strategy, self.topology_metric, self.epi_metric, self.n, self.spearman_rho, self.p_value]


def paired_values(
    records: Iterable[SummaryRecord],
    strategy: str,
    baseline: str,
    metric: str,
    sweep_id: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Values of ``metric`` for runs sharing (sweep_id, seed) under both strategies."""
    by_key: Dict[Tuple[int, int], Dict[str, float]] = {}
    for r in records:
        if r.failed or (sweep_id is not None and r.sweep_id != sweep_id):
            continue
        value = r.get(metric)
        if value is None:
            continue
        by_key.setdefault((r.sweep_id, r.seed), {})[r.strategy] = float(value)
    pairs = sorted(k for k, v in by_key.items() if strategy in v and baseline in v)
    a = np.array([by_key[k][strategy] for k in pairs], dtype=np.float64)
    b = np.array([by_key[k][baseline] for k in pairs], dtype=np.float64)
    return a, b


def sign_test(values: np.ndarray, baseline: np.ndarray) -> Tuple[int, int, int, float]:
    """
    One-sided sign test that ``values`` tend to be lower than ``baseline``.

    Returns:
        ``(better, ties, worse, p_value)``; ties are dropped from the test.
    """
    diff = np.asarray(values, dtype=np.float64) - np.asarray(baseline, dtype=np.float64)
    better = int(np.count_nonzero(diff < 0))
    worse = int(np.count_nonzero(diff > 0))
    ties = int(diff.size - better - worse)
    if better + worse == 0:
        return better, ties, worse, 1.0
    p_value = binomtest(better, better + worse, 0.5, alternative="greater").pvalue
    return better, ties, worse, float(p_value)


def sign_tests(
    records: Sequence[SummaryRecord],
    baselines: Sequence[str] = (STRATEGY_NONE, STRATEGY_AGE),
    metrics: Sequence[str] = INCIDENCE_METRICS,
) -> List[SignTest]:
    """Sign test of every strategy against each baseline, per sweep point and metric."""
    strategies = sorted({r.strategy for r in records})
    sweep_ids = sorted({r.sweep_id for r in records})
    results: List[SignTest] = []
    for sweep_id in sweep_ids:
        for baseline in baselines:
            if baseline not in strategies:
                continue
            for strategy in strategies:
                if strategy == baseline:
                    continue
                for metric in metrics:
                    a, b = paired_values(records, strategy, baseline, metric, sweep_id)
                    better, ties, worse, p = sign_test(a, b)
                    results.append(SignTest(
                        sweep_id, metric, strategy, baseline, int(a.size), better, ties, worse,
                        float(np.mean(a - b)) if a.size else None, p,
                    ))
    return results


def spearman(x: Sequence[float], y: Sequence[float]) -> Tuple[Optional[float], Optional[float]]:
    """Spearman rank correlation; ``(None, None)`` when undefined (short or constant input)."""
    if len(x) < 3:
        return None, None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rho, p = spearmanr(x, y)
    rho, p = float(rho), float(p)
    if math.isnan(rho):
        return None, None
    return rho, p


def correlations(
    records: Sequence[SummaryRecord],
    topology_metrics: Sequence[str] = TOPOLOGY_COLUMNS,
    epi_metrics: Sequence[str] = EPI_COLUMNS,
) -> List[Correlation]:
    """Spearman correlations per strategy across every sweep point and replicate."""
    results: List[Correlation] = []
    for strategy in sorted({r.strategy for r in records}):
        rows = [r for r in records if r.strategy == strategy and not r.failed]
        for topo in topology_metrics:
            for epi in epi_metrics:
                pairs = [(r.get(topo), r.get(epi)) for r in rows]
                pairs = [(float(a), float(b)) for a, b in pairs if a is not None and b is not None]
                rho, p = spearman([a for a, _ in pairs], [b for _, b in pairs])
                results.append(Correlation(strategy, topo, epi, len(pairs), rho, p))
    logger.debug("Computed %d correlations", len(results))
    return results

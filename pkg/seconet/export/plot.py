"""
Static SVG charts of an epidemic metric against a topology metric.

One series per strategy: the individual runs as markers plus a line through
the mean of each equal-width x bin.
"""

from __future__ import annotations

import logging
import os
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from seconet.constants import (  # noqa: E402
    DEFAULT_PLOT_BINS,
    EPI_COLUMNS,
    LOGGER_NAME,
    STRATEGIES,
    TOPOLOGY_COLUMNS,
)
from seconet.exceptions import ConfigurationError  # noqa: E402
from seconet.harness.sweep import SummaryRecord  # noqa: E402

logger = logging.getLogger(LOGGER_NAME)

# fixed so a strategy keeps its colour across every figure
STRATEGY_COLORS = dict(zip(STRATEGIES, matplotlib.colormaps["tab10"].colors[:8]))

METRIC_LABELS = {
    "avg_degree": "Average degree",
    "gamma": "Power-law exponent",
    "aspl": "Average shortest path length",
    "clustering_sq": "Square clustering coefficient",
    "clustering_tri": "Triangle clustering coefficient",
    "peak_inc": "Maximum daily incidence",
    "peak_day": "Peak prevalence day",
    "cum_inc": "Cumulative incidence",
    "peak_inc_f": "Maximum daily incidence (female)",
    "peak_day_f": "Peak prevalence day (female)",
    "cum_inc_f": "Cumulative incidence (female)",
    "peak_inc_m": "Maximum daily incidence (male)",
    "peak_day_m": "Peak prevalence day (male)",
    "cum_inc_m": "Cumulative incidence (male)",
}

PLOT_TOPOLOGY_METRICS = ["avg_degree", "gamma", "aspl", "clustering_sq"]


def binned_means(x: Sequence[float], y: Sequence[float], bins: int = DEFAULT_PLOT_BINS) -> Tuple[np.ndarray, np.ndarray]:
    """
    Mean of ``y`` in each of ``bins`` equal-width bins over the range of ``x``.

    Empty bins are dropped. A constant ``x`` gives a single bin.

    Returns:
        ``(bin_centers, means)``
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size == 0:
        return np.empty(0), np.empty(0)
    lo, hi = float(x.min()), float(x.max())
    if lo == hi:
        return np.array([lo]), np.array([y.mean()])

    edges = np.linspace(lo, hi, bins + 1)
    # the last bin is closed on the right
    idx = np.clip(np.digitize(x, edges[1:-1], right=False), 0, bins - 1)
    sums = np.bincount(idx, weights=y, minlength=bins)
    counts = np.bincount(idx, minlength=bins)
    centers = (edges[:-1] + edges[1:]) / 2
    filled = counts > 0
    return centers[filled], sums[filled] / counts[filled]


def _check_metric(name: str, allowed: Sequence[str], kind: str) -> None:
    if name not in allowed:
        raise ConfigurationError(f"unknown {kind} metric {name!r}; valid: {', '.join(allowed)}")


def plot(
    records: Sequence[SummaryRecord],
    epi_metric: str,
    topo_metric: str,
    path: str,
    bins: int = DEFAULT_PLOT_BINS,
) -> List[str]:
    """
    Render ``epi_metric`` against ``topo_metric`` to an SVG file.

    Returns:
        Legend labels, in strategy order.

    Raises:
        ConfigurationError: unknown metric name or no usable records
    """
    _check_metric(epi_metric, EPI_COLUMNS, "epidemic")
    _check_metric(topo_metric, TOPOLOGY_COLUMNS, "topology")
    usable = [r for r in records if not r.failed]
    if not usable:
        raise ConfigurationError("nothing to plot: no successful records")

    plt.rcParams["svg.fonttype"] = "path"
    plt.rcParams["svg.hashsalt"] = "seconet"
    fig, ax = plt.subplots(figsize=(7, 5))
    labels: List[str] = []
    present = {r.strategy for r in usable}

    for strategy in [s for s in STRATEGIES if s in present]:
        points = [
            (r.get(topo_metric), r.get(epi_metric))
            for r in usable
            if r.strategy == strategy and r.get(topo_metric) is not None and r.get(epi_metric) is not None
        ]
        if not points:
            continue
        x, y = (np.array(v, dtype=np.float64) for v in zip(*points))
        color = STRATEGY_COLORS[strategy]
        ax.scatter(x, y, s=12, alpha=0.4, color=color, label=strategy)
        cx, cy = binned_means(x, y, bins)
        ax.plot(cx, cy, color=color, linewidth=1.5, label="_nolegend_")
        labels.append(strategy)

    ax.set_xlabel(METRIC_LABELS[topo_metric])
    ax.set_ylabel(METRIC_LABELS[epi_metric])
    ax.set_title(f"{METRIC_LABELS[epi_metric]} across network structures")
    ax.legend(title="Strategy", fontsize="small")
    fig.tight_layout()

    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info("Plot written: %s", path)
    return labels


def plot_all(records: Sequence[SummaryRecord], out_dir: str, bins: int = DEFAULT_PLOT_BINS) -> List[str]:
    """Every epidemic metric against every plotted topology metric, one SVG each."""
    paths = []
    for epi in EPI_COLUMNS:
        for topo in PLOT_TOPOLOGY_METRICS:
            path = os.path.join(out_dir, f"{epi}_vs_{topo}.svg")
            plot(records, epi, topo, path, bins)
            paths.append(path)
    return paths

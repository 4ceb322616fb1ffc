"""
Topology metrics of a network snapshot.

All functions are pure: they read the snapshot and keep no state. Graph
traversal (components, BFS path lengths, clustering) goes through networkx.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, Literal, Optional, Tuple

import networkx as nx
import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta

from seconet.config.schema import TopologyConfig
from seconet.constants import DEFAULT_POWERLAW_KMIN, DEFAULT_POWERLAW_MIN_TAIL, LOGGER_NAME
from seconet.core.network import ContactNetwork
from seconet.exceptions import ConfigurationError

logger = logging.getLogger(LOGGER_NAME)

GammaMethod = Literal["approximate", "exact"]

# search interval for the exact estimator
_GAMMA_BOUNDS = (1.0 + 1e-6, 12.0)


@dataclass(frozen=True)
class TopologySummary:
    average_degree: float
    powerlaw_exponent: Optional[float]
    avg_shortest_path: Optional[float]
    clustering_square: float
    clustering_triangle: float

    def to_dict(self) -> Dict[str, Optional[float]]:
        return asdict(self)


def average_degree(network: ContactNetwork) -> float:
    """``2 |E| / N`` with N the whole population."""
    if network.size == 0:
        return 0.0
    return 2.0 * network.link_count / network.size


def powerlaw_exponent(
    degree_sequence: Iterable[int],
    k_min: int = DEFAULT_POWERLAW_KMIN,
    method: GammaMethod = "approximate",
    min_tail: int = DEFAULT_POWERLAW_MIN_TAIL,
) -> Optional[float]:
    """
    Discrete maximum-likelihood estimate of the degree exponent.

    ``approximate`` uses the closed form
    ``1 + n / sum(ln(k / (k_min - 0.5)))``; it is accurate once k_min is
    around 6 or more. ``exact`` maximises the discrete likelihood with the
    Hurwitz zeta normaliser and is unbiased at small k_min.

    Args:
        degree_sequence: Node degrees (order does not matter)
        k_min:           Lower cut-off of the tail
        method:          ``"approximate"`` or ``"exact"``
        min_tail:        Minimum tail size for a fit

    Returns:
        The estimate, or ``None`` when the tail is too short or degenerate.
    """
    if k_min < 1:
        raise ConfigurationError(f"k_min must be >= 1, got {k_min}")
    degrees = np.asarray(list(degree_sequence), dtype=np.float64)
    tail = np.sort(degrees[degrees >= k_min])
    if tail.size < min_tail:
        logger.debug("Power-law fit skipped: %d tail nodes (< %d)", tail.size, min_tail)
        return None
    if tail[0] == tail[-1]:
        logger.debug("Power-law fit skipped: every tail degree equals %d", int(tail[0]))
        return None

    n = tail.size
    if method == "approximate":
        return float(1.0 + n / np.sum(np.log(tail / (k_min - 0.5))))
    if method == "exact":
        log_sum = float(np.sum(np.log(tail)))

        def neg_log_likelihood(gamma: float) -> float:
            return n * math.log(zeta(gamma, k_min)) + gamma * log_sum

        result = minimize_scalar(
            neg_log_likelihood, bounds=_GAMMA_BOUNDS, method="bounded", options={"xatol": 1e-9}
        )
        return float(result.x)
    raise ConfigurationError(f"unknown gamma method {method!r}")


def largest_component(graph: nx.Graph) -> set:
    """Largest connected component; equal sizes go to the one holding the lowest id."""
    components = list(nx.connected_components(graph))
    if not components:
        return set()
    return max(components, key=lambda c: (len(c), -min(c)))


def average_shortest_path_length(network: ContactNetwork, graph: Optional[nx.Graph] = None) -> Optional[float]:
    """Mean BFS distance over ordered pairs of the largest component; ``None`` below two nodes."""
    graph = network.to_networkx() if graph is None else graph
    component = largest_component(graph)
    if len(component) < 2:
        return None
    return float(nx.average_shortest_path_length(graph.subgraph(component)))


def clustering(network: ContactNetwork, graph: Optional[nx.Graph] = None) -> Tuple[float, float]:
    """
    Return ``(triangle, square)`` clustering.

    The triangle value is global transitivity and is 0 on any bipartite
    graph. The square value averages four-cycle clustering over nodes with at
    least two neighbours.
    """
    graph = network.to_networkx() if graph is None else graph
    triangle = float(nx.transitivity(graph)) if graph.number_of_edges() else 0.0

    eligible = [v for v, d in graph.degree() if d >= 2]
    if not eligible:
        return triangle, 0.0
    squares = nx.square_clustering(graph, nodes=eligible)
    return triangle, float(np.mean([squares[v] for v in eligible]))


def summarize(network: ContactNetwork, config: Optional[TopologyConfig] = None) -> TopologySummary:
    """Compute every topology metric on one snapshot."""
    config = config or TopologyConfig()
    graph = network.to_networkx()
    triangle, square = clustering(network, graph)
    summary = TopologySummary(
        average_degree=average_degree(network),
        powerlaw_exponent=powerlaw_exponent(
            network.degrees, k_min=config.powerlaw_kmin, method=config.gamma_method
        ),
        avg_shortest_path=average_shortest_path_length(network, graph),
        clustering_square=square,
        clustering_triangle=triangle,
    )
    logger.debug("Topology on day %d: %s", network.current_day, summary)
    return summary

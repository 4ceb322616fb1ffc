"""
Node-importance scores used to rank vaccination candidates.

Scores cover the joined part of the network only, and N in every
normalisation is the number of joined people. Betweenness and percolation
share one Brandes pass (BFS shortest-path counting followed by reverse-order
dependency accumulation).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from seconet.constants import DEFAULT_EIGEN_MAX_ITERATIONS, DEFAULT_EIGEN_TOLERANCE, LOGGER_NAME
from seconet.core.network import ContactNetwork
from seconet.exceptions import ConvergenceError

logger = logging.getLogger(LOGGER_NAME)

PercolationStates = Union[Mapping[int, float], Sequence[float], np.ndarray]


class CentralityKind(str, Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    PERCOLATION = "percolation"
    EIGENVECTOR = "eigenvector"


@dataclass(frozen=True)
class CentralityScores:
    """Scores of every joined node, aligned with ``node_ids`` (ascending)."""

    kind: CentralityKind
    node_ids: np.ndarray
    values: np.ndarray
    computed_at: int

    def as_dict(self) -> Dict[int, float]:
        return {int(i): float(v) for i, v in zip(self.node_ids, self.values)}

    def dense(self, size: int) -> np.ndarray:
        """Scores as an array over all person ids; unjoined people score 0."""
        out = np.zeros(size, dtype=np.float64)
        out[self.node_ids] = self.values
        return out

    def __getitem__(self, node: int) -> float:
        idx = int(np.searchsorted(self.node_ids, node))
        if idx >= self.node_ids.size or self.node_ids[idx] != node:
            raise KeyError(node)
        return float(self.values[idx])


# ===== Snapshot helpers =====


def _local_graph(network: ContactNetwork) -> Tuple[np.ndarray, List[List[int]]]:
    """Joined ids and an adjacency list re-indexed to 0..N-1 (neighbours ascending)."""
    nodes = network.population.joined_ids()
    index = {int(v): k for k, v in enumerate(nodes)}
    adjacency = [sorted(index[w] for w in network.adjacency[int(v)]) for v in nodes]
    return nodes, adjacency


def _shortest_paths(adjacency: List[List[int]], source: int):
    """BFS from ``source``: visit order, predecessors, path counts and distances."""
    n = len(adjacency)
    dist = [-1] * n
    sigma = [0] * n
    preds: List[List[int]] = [[] for _ in range(n)]
    order: List[int] = []

    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        next_dist = dist[v] + 1
        sigma_v = sigma[v]
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = next_dist
                queue.append(w)
            if dist[w] == next_dist:
                sigma[w] += sigma_v
                preds[w].append(v)
    return order, preds, sigma, dist


def _dependencies(order: List[int], preds: List[List[int]], sigma: List[int]) -> List[float]:
    """Brandes dependency of the BFS source on every node it reaches."""
    delta = [0.0] * len(sigma)
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
    return delta


def _pair_dependency_sums(
    adjacency: List[List[int]],
    source_weight: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    ``sum_s w_s * sum_v sigma_sv(i) / sigma_sv`` for every node i over ordered pairs.

    With ``source_weight`` omitted every source weighs 1.
    """
    n = len(adjacency)
    totals = np.zeros(n, dtype=np.float64)
    for s in range(n):
        weight = 1.0 if source_weight is None else float(source_weight[s])
        if weight == 0.0:
            continue
        order, preds, sigma, _ = _shortest_paths(adjacency, s)
        delta = np.asarray(_dependencies(order, preds, sigma))
        delta[s] = 0.0
        totals += weight * delta
    return totals


# ===== Scores =====


def degree_centrality(network: ContactNetwork) -> CentralityScores:
    nodes = network.population.joined_ids()
    return CentralityScores(
        CentralityKind.DEGREE,
        nodes,
        network.degrees[nodes].astype(np.float64),
        network.current_day,
    )


def betweenness_centrality(network: ContactNetwork) -> CentralityScores:
    """Fraction of ordered shortest paths through each node, scaled by ``1/((N-1)(N-2))``."""
    nodes, adjacency = _local_graph(network)
    n = nodes.size
    values = np.zeros(n, dtype=np.float64)
    if n >= 3:
        values = _pair_dependency_sums(adjacency) / ((n - 1) * (n - 2))
    return CentralityScores(CentralityKind.BETWEENNESS, nodes, values, network.current_day)


def closeness_centrality(network: ContactNetwork) -> CentralityScores:
    """``1 / sum of distances`` to every node in the same component; isolated nodes score 0."""
    nodes, adjacency = _local_graph(network)
    values = np.zeros(nodes.size, dtype=np.float64)
    for s in range(nodes.size):
        if not adjacency[s]:
            continue
        _, _, _, dist = _shortest_paths(adjacency, s)
        total = sum(d for d in dist if d > 0)
        values[s] = 1.0 / total
    return CentralityScores(CentralityKind.CLOSENESS, nodes, values, network.current_day)


def _states_array(states: PercolationStates, nodes: np.ndarray) -> np.ndarray:
    if isinstance(states, Mapping):
        return np.array([float(states.get(int(v), 0.0)) for v in nodes], dtype=np.float64)
    return np.asarray(states, dtype=np.float64)[nodes]


def percolation_centrality(network: ContactNetwork, percolation_states: PercolationStates) -> CentralityScores:
    """
    Shortest paths through each node weighted by the percolation state of
    their source.

    ``PC_i = 1/(N-2) * sum_{s,v} sigma_sv(i)/sigma_sv * chi_s / (sum_j chi_j - chi_i)``.
    A node whose denominator is 0 scores 0.

    Args:
        network:            Current network
        percolation_states: chi per person id, as a mapping or a dense array
    """
    nodes, adjacency = _local_graph(network)
    n = nodes.size
    values = np.zeros(n, dtype=np.float64)
    chi = _states_array(percolation_states, nodes)
    if n >= 3 and chi.any():
        weighted = _pair_dependency_sums(adjacency, source_weight=chi)
        denominator = chi.sum() - chi
        positive = denominator > 0
        values[positive] = weighted[positive] / denominator[positive] / (n - 2)
    return CentralityScores(CentralityKind.PERCOLATION, nodes, values, network.current_day)


def _leading_vector(shifted: sparse.csr_matrix, tolerance: float, max_iterations: int) -> np.ndarray:
    """Unit-norm power iteration on one connected block of ``A + I``."""
    x = np.full(shifted.shape[0], 1.0 / np.sqrt(shifted.shape[0]))
    residual = np.inf
    for iteration in range(1, max_iterations + 1):
        y = shifted @ x
        y /= np.linalg.norm(y)
        residual = float(np.max(np.abs(y - x)))
        x = y
        if residual < tolerance:
            logger.debug("Eigenvector block of %d nodes converged after %d iterations", x.size, iteration)
            return x
    raise ConvergenceError(
        f"eigenvector centrality did not converge in {max_iterations} iterations "
        f"(residual {residual:.3e})",
        residual=residual,
    )


def eigenvector_centrality(
    network: ContactNetwork,
    tolerance: float = DEFAULT_EIGEN_TOLERANCE,
    max_iterations: int = DEFAULT_EIGEN_MAX_ITERATIONS,
) -> CentralityScores:
    """
    Leading eigenvector of the adjacency matrix of each connected component.

    Every component with at least one link is solved on its own by shifted
    power iteration ``x <- (A + I) x / ||(A + I) x||`` until successive
    iterates differ by less than ``tolerance`` in max-norm. The combined
    vector is then scaled to unit length. Isolated nodes score 0.

    Raises:
        ConvergenceError: a component did not converge within ``max_iterations``
    """
    nodes, adjacency = _local_graph(network)
    n = nodes.size
    if network.link_count == 0:
        logger.warning("Eigenvector centrality on an empty network on day %d: all scores 0", network.current_day)
        return CentralityScores(CentralityKind.EIGENVECTOR, nodes, np.zeros(n), network.current_day)

    rows = np.repeat(np.arange(n), [len(a) for a in adjacency])
    cols = np.fromiter((w for a in adjacency for w in a), dtype=np.int64, count=rows.size)
    matrix = sparse.csr_matrix((np.ones(rows.size), (rows, cols)), shape=(n, n))
    n_components, labels = connected_components(matrix, directed=False)

    x = np.zeros(n, dtype=np.float64)
    by_component = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels, minlength=n_components))[:-1]
    for members in np.split(by_component, bounds):
        if members.size < 2:
            continue
        block = matrix[members][:, members] + sparse.identity(members.size, format="csr")
        x[members] = _leading_vector(block.tocsr(), tolerance, max_iterations)

    x /= np.linalg.norm(x)
    return CentralityScores(CentralityKind.EIGENVECTOR, nodes, x, network.current_day)

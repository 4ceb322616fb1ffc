"""
Network analysis: topology metrics and centrality scores.

Strategy comparison lives in :mod:`seconet.analysis.comparison`; import it
directly (it depends on the sweep harness).
"""

from seconet.analysis.centrality import (
    CentralityKind,
    CentralityScores,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    percolation_centrality,
)
from seconet.analysis.topology import (
    TopologySummary,
    average_degree,
    average_shortest_path_length,
    clustering,
    powerlaw_exponent,
    summarize,
)

__all__ = [
    "CentralityKind",
    "CentralityScores",
    "TopologySummary",
    "average_degree",
    "average_shortest_path_length",
    "betweenness_centrality",
    "closeness_centrality",
    "clustering",
    "degree_centrality",
    "eigenvector_centrality",
    "percolation_centrality",
    "powerlaw_exponent",
    "summarize",
]

"""
Output writers.

- csv_writer: per-run tables, network snapshots, summary and report CSVs
- plot:       SVG figures from summary records
"""

from seconet.export.csv_writer import (
    atomic_open,
    read_summary,
    write_audit,
    write_correlations,
    write_daily,
    write_edges,
    write_json,
    write_nodes,
    write_scores,
    write_sign_tests,
    write_summary,
)

__all__ = [
    "atomic_open",
    "read_summary",
    "write_audit",
    "write_correlations",
    "write_daily",
    "write_edges",
    "write_json",
    "write_nodes",
    "write_scores",
    "write_sign_tests",
    "write_summary",
]

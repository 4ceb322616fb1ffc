"""
CSV and JSON writers for run outputs.

Every file is written to a temporary file in the target directory and then
renamed over the destination, so readers never see a half-written file.
Floats are rendered with six significant digits and missing values as NA;
rewriting the same records yields a byte-identical file.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import tempfile
from contextlib import contextmanager
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO

from seconet.analysis.centrality import CentralityScores
from seconet.constants import (
    AUDIT_COLUMNS,
    CORRELATION_COLUMNS,
    DAILY_COLUMNS,
    EDGE_COLUMNS,
    EPI_COLUMNS,
    ERROR_COLUMN,
    LOGGER_NAME,
    NODE_COLUMNS,
    SCORE_COLUMNS,
    SIGN_TEST_COLUMNS,
    SUMMARY_COLUMNS,
    TOPOLOGY_COLUMNS,
)
from seconet.core.network import ContactNetwork
from seconet.epidemic.engine import DailyCounts
from seconet.exceptions import ConfigurationError
from seconet.harness.sweep import SummaryRecord
from seconet.utils.validation import format_number, parse_number, to_native
from seconet.vaccination.strategies import AuditEntry

logger = logging.getLogger(LOGGER_NAME)

# snapshots keep more precision than summary tables
SNAPSHOT_DIGITS = 12


@contextmanager
def atomic_open(path: str) -> Iterator[TextIO]:
    """Open a temp file next to ``path``; rename it over ``path`` on success."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".tmp_", suffix=os.path.splitext(path)[1])
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            yield f
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def write_rows(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]], digits: Optional[int] = None) -> int:
    """Write ``header`` and ``rows`` as CSV. Returns the number of data rows."""
    count = 0
    with atomic_open(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [format_number(v) if digits is None else format_number(v, digits) for v in row]
            )
            count += 1
    logger.debug("Wrote %d rows to %s", count, path)
    return count


def write_json(path: str, data: Dict[str, Any]) -> None:
    with atomic_open(path) as f:
        json.dump(to_native(data), f, indent=2, sort_keys=True)
        f.write("\n")


# ===== Per-run outputs =====


def write_daily(series: Sequence[DailyCounts], path: str) -> int:
    return write_rows(path, DAILY_COLUMNS, (c.as_row() for c in series))


def write_edges(network: ContactNetwork, path: str) -> int:
    return write_rows(path, EDGE_COLUMNS, network.edge_rows(), digits=SNAPSHOT_DIGITS)


def write_nodes(network: ContactNetwork, path: str) -> int:
    return write_rows(path, NODE_COLUMNS, network.node_rows(), digits=SNAPSHOT_DIGITS)


def write_scores(scores: CentralityScores, path: str) -> int:
    rows = zip(scores.node_ids.tolist(), scores.values.tolist())
    return write_rows(path, SCORE_COLUMNS, rows, digits=SNAPSHOT_DIGITS)


def write_audit(entries: Sequence[AuditEntry], path: str) -> int:
    """One row per session; the chosen ids trail the fixed columns."""
    rows = (
        [e.day, e.strategy, e.doses_available, e.doses_used, *e.chosen_ids]
        for e in entries
    )
    return write_rows(path, AUDIT_COLUMNS, rows)


# ===== Summary =====


def write_summary(records: Iterable[SummaryRecord], path: str) -> int:
    """
    Write the summary table sorted by ``(sweep_id, strategy, seed)``.

    An ``error`` column is appended only when at least one run failed.
    """
    ordered = sorted(records, key=lambda r: r.sort_key)
    with_errors = any(r.failed for r in ordered)
    header = SUMMARY_COLUMNS + ([ERROR_COLUMN] if with_errors else [])
    rows = (r.values() + ([r.error or ""] if with_errors else []) for r in ordered)
    return write_rows(path, header, rows)


_INT_COLUMNS = {"sweep_id", "seed", *EPI_COLUMNS}


def read_summary(path: str) -> List[SummaryRecord]:
    """Read a summary CSV written by :func:`write_summary`."""
    if not os.path.exists(path):
        raise ConfigurationError(f"summary file not found: {path}")
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        missing = [c for c in SUMMARY_COLUMNS if c not in (reader.fieldnames or [])]
        if missing:
            raise ConfigurationError(f"{path} is not a summary file (missing columns {missing})")
        records = []
        for row in reader:
            values: Dict[str, Any] = {"strategy": row["strategy"]}
            for name in ("sweep_id", "seed", *TOPOLOGY_COLUMNS, *EPI_COLUMNS):
                number = parse_number(row[name])
                values[name] = int(number) if number is not None and name in _INT_COLUMNS else number
            values["error"] = row.get(ERROR_COLUMN) or None
            records.append(SummaryRecord(**values))
    return records


# ===== Report =====


def write_sign_tests(results: Iterable, path: str) -> int:
    return write_rows(path, SIGN_TEST_COLUMNS, (r.values() for r in results))


def write_correlations(results: Iterable, path: str) -> int:
    return write_rows(path, CORRELATION_COLUMNS, (r.values() for r in results))

"""
Unit tests for seconet.export.csv_writer

Tests cover:
- summary CSV layout, ordering and byte-stable rewrites
- error column handling and read-back
- per-run tables (daily, edges, nodes, audit, scores)
"""
import json
import os

import numpy as np
import pytest

from seconet.analysis.centrality import degree_centrality
from seconet.constants import DAILY_COLUMNS, SUMMARY_COLUMNS
from seconet.epidemic.engine import DailyCounts
from seconet.exceptions import ConfigurationError
from seconet.export.csv_writer import (
    atomic_open,
    read_summary,
    write_audit,
    write_daily,
    write_edges,
    write_json,
    write_nodes,
    write_scores,
    write_summary,
)
from seconet.harness.sweep import SummaryRecord
from seconet.vaccination.strategies import AuditEntry


def _record(sweep_id, strategy, seed, error=None):
    if error:
        return SummaryRecord(sweep_id=sweep_id, seed=seed, strategy=strategy, error=error)
    return SummaryRecord(
        sweep_id=sweep_id, seed=seed, strategy=strategy,
        avg_degree=2.0 / 3.0, gamma=None, aspl=4.123456789, clustering_sq=0.25, clustering_tri=0.0,
        peak_inc=12, peak_day=40, cum_inc=300,
        peak_inc_f=7, peak_day_f=41, cum_inc_f=180,
        peak_inc_m=5, peak_day_m=38, cum_inc_m=120,
    )


def _lines(path):
    with open(path, encoding="utf-8") as f:
        return f.read().splitlines()


# ===========================================================================
# Summary
# ===========================================================================

class TestWriteSummary:

    def test_empty_is_header_only(self, tmp_dir):
        path = str(tmp_dir / "summary.csv")
        assert write_summary([], path) == 0
        assert _lines(path) == [",".join(SUMMARY_COLUMNS)]

    def test_rows_sorted_and_formatted(self, tmp_dir):
        path = str(tmp_dir / "summary.csv")
        records = [_record(1, "age", 5), _record(0, "none", 6), _record(0, "degree", 5), _record(0, "none", 5)]
        write_summary(records, path)
        lines = _lines(path)
        assert len(lines) == 5
        keys = [tuple(line.split(",")[:3]) for line in lines[1:]]
        assert keys == [("0", "5", "degree"), ("0", "5", "none"), ("0", "6", "none"), ("1", "5", "age")]
        assert lines[1].split(",")[3:8] == ["0.666667", "NA", "4.12346", "0.25", "0"]

    def test_rewrite_is_byte_identical(self, tmp_dir):
        a, b = str(tmp_dir / "a.csv"), str(tmp_dir / "b.csv")
        records = [_record(0, s, seed) for s in ("ring", "none") for seed in (3, 1)]
        write_summary(records, a)
        write_summary(list(reversed(records)), b)
        with open(a, "rb") as fa, open(b, "rb") as fb:
            assert fa.read() == fb.read()

    def test_error_column_only_when_a_run_failed(self, tmp_dir):
        path = str(tmp_dir / "summary.csv")
        write_summary([_record(0, "none", 1), _record(0, "age", 1, error="SeedingError: no adults")], path)
        lines = _lines(path)
        assert lines[0].endswith(",error")
        assert lines[1].split(",")[-1] == "SeedingError: no adults"
        assert lines[1].split(",")[3] == "NA"
        assert lines[2].split(",")[-1] == ""

    def test_read_back(self, tmp_dir):
        path = str(tmp_dir / "summary.csv")
        write_summary([_record(0, "none", 1), _record(0, "age", 1, error="boom")], path)
        records = read_summary(path)
        assert [r.strategy for r in records] == ["age", "none"]
        assert records[0].failed and records[0].cum_inc is None
        assert records[1].cum_inc == 300
        assert isinstance(records[1].cum_inc, int)
        assert records[1].gamma is None
        assert records[1].avg_degree == pytest.approx(0.666667)

    def test_read_missing_file(self, tmp_dir):
        with pytest.raises(ConfigurationError):
            read_summary(str(tmp_dir / "nope.csv"))

    def test_read_wrong_file(self, tmp_dir):
        path = tmp_dir / "other.csv"
        path.write_text("a,b\n1,2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            read_summary(str(path))


# ===========================================================================
# Per-run tables
# ===========================================================================

class TestRunTables:

    def test_daily(self, tmp_dir):
        path = str(tmp_dir / "daily.csv")
        row = DailyCounts(0, 8, 2, 0, 0, 4, 1, 0, 0, 4, 1, 0, 0)
        write_daily([row], path)
        assert _lines(path) == [",".join(DAILY_COLUMNS), "0,8,2,0,0,4,1,0,0,4,1,0,0,0,0,0"]

    def test_edges_and_nodes(self, tmp_dir, path4):
        edges, nodes = str(tmp_dir / "edges.csv"), str(tmp_dir / "nodes.csv")
        assert write_edges(path4, edges) == 3
        assert write_nodes(path4, nodes) == 4
        assert _lines(edges)[1].endswith(",0,10000,primary")
        assert _lines(nodes)[1] == f"0,22,{path4.population.genders[0]},100,10,0"

    def test_audit_trails_chosen_ids(self, tmp_dir):
        path = str(tmp_dir / "audit.csv")
        write_audit([AuditEntry(6, "degree", 3, 2, (4, 9)), AuditEntry(13, "degree", 3, 0, ())], path)
        assert _lines(path)[1:] == ["6,degree,3,2,4,9", "13,degree,3,0"]

    def test_scores(self, tmp_dir, star3):
        path = str(tmp_dir / "scores.csv")
        write_scores(degree_centrality(star3), path)
        assert _lines(path) == ["node_id,score", "0,3", "1,1", "2,1", "3,1"]


# ===========================================================================
# Atomic writes
# ===========================================================================

class TestAtomicOpen:

    def test_failure_leaves_target_untouched(self, tmp_dir):
        path = tmp_dir / "keep.csv"
        path.write_text("original\n", encoding="utf-8")
        with pytest.raises(RuntimeError):
            with atomic_open(str(path)) as f:
                f.write("partial")
                raise RuntimeError("interrupted")
        assert path.read_text(encoding="utf-8") == "original\n"
        assert os.listdir(tmp_dir) == ["keep.csv"]

    def test_json_converts_numpy(self, tmp_dir):
        path = str(tmp_dir / "topology.json")
        write_json(path, {"average_degree": np.float64(2.5), "n": np.int64(3)})
        with open(path, encoding="utf-8") as f:
            assert json.load(f) == {"average_degree": 2.5, "n": 3}

"""Benchmark table harness.

Table anchors here are the deterministic truncation-dominated cells,
cross-checked by hand from the diagonal stability functions (see
test_baselines for the rationals); the exact-scheme cells only have a
rounding floor.
"""

import json
import math

import numpy as np
import pytest

from eds3.baselines import MethodId
from eds3.bench import (
    CSV_HEADER,
    ErrorMetric,
    TABLE3_BLOCKS,
    TABLE4_BLOCKS,
    example_records,
    records_csv,
    records_json,
    run_cell,
    run_table,
    steps_for,
    table_records,
)
from eds3.errors import GridMismatch
from eds3.problems import example3, example4


def test_steps_for_exact_and_near_integer():
    assert steps_for(1.0, 0.1) == 10
    assert steps_for(1e5, 1e-2) == 10_000_000
    assert steps_for(1e-3, 1e-6) == 1000


def test_steps_for_rejects_non_integer_ratio():
    with pytest.raises(GridMismatch):
        steps_for(1.0, 0.3)
    with pytest.raises(GridMismatch):
        steps_for(0.5, 1.0)


def test_run_cell_exact_scheme_is_tiny():
    rec = run_cell(example3(1.0), MethodId.IEDS, 1.0, 1.0, ErrorMetric.FINAL_SUM)
    assert rec.error < 1e-12
    assert rec.wall_time >= 0.0
    assert rec.lam == 1.0


def test_run_cell_rk4_anchor():
    rec = run_cell(example3(1.0), MethodId.RK4, 1.0, 1.0, ErrorMetric.FINAL_SUM)
    assert rec.error == pytest.approx(0.0195, abs=5e-4)


def test_run_cell_max_metric_anchor():
    rec = run_cell(example4(), MethodId.RK4, 0.1, 0.1, ErrorMetric.MAX_SUM)
    assert rec.error == pytest.approx(291.0, abs=0.5)
    assert math.isnan(rec.lam)


def test_table3_shape_and_order():
    records = table_records(3)
    assert len(records) == 220  # 44 published rows x 5 method columns
    # canonical order: first block is (T=1, lambda=1), h ascending,
    # methods in column order
    first = records[:5]
    assert [r.method for r in first] == [
        MethodId.IEDS, MethodId.EEDS, MethodId.RK4,
        MethodId.TAYLOR5, MethodId.TRAPEZOIDAL,
    ]
    assert all(r.T == 1.0 and r.lam == 1.0 and r.h == 1e-5 for r in first)
    rows = sum(len(hs) for _, _, hs in TABLE3_BLOCKS)
    assert rows == 44


def test_exact_cells_sit_on_rounding_floor():
    """EDS table cells have no truncation component; the error is step
    accumulation of rounding, a bounded multiple of N*eps, orders of
    magnitude below every classical column. The stiff table tolerates a
    larger constant: its explicit parameters pass through lambda^2-scaled
    cancellations that cost ~1e3 eps of absolute transfer defect."""
    eps = np.finfo(float).eps
    for table, c in ((3, 100.0), (4, 1.5e4)):
        for r in table_records(table):
            if r.method in (MethodId.IEDS, MethodId.EEDS):
                n = steps_for(r.T, r.h)
                assert r.error <= c * n * eps, (table, r.method, r.T, r.h, r.error)


def test_table4_shape_and_determinism():
    records = table_records(4)
    assert len(records) == 105  # 21 rows x 5 columns
    assert sum(len(hs) for _, hs in TABLE4_BLOCKS) == 21
    again = table_records(4)

    def strip(rs):
        return [(r.method, r.T, r.lam, r.h, r.error) for r in rs]

    assert strip(records) == strip(again)


def test_records_csv_round_trip():
    records = example_records(4)
    text = records_csv(records)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == len(records) + 1
    for line, rec in zip(lines[1:], records):
        m, t, lam, h, err, wall = line.split(",")
        assert m == rec.method.value
        assert float(t) == rec.T
        assert float(h) == rec.h
        assert float(err) == rec.error or (math.isnan(float(err)) and math.isnan(rec.error))
        assert float(wall) == rec.wall_time


def test_records_json_mirrors_csv_fields():
    records = example_records(3)[:5]
    payload = json.loads(records_json(records))
    assert len(payload["records"]) == 5
    row = payload["records"][0]
    assert set(row) == {"method", "T", "lambda", "h", "error", "wall_time"}


def test_example5_records_contrast():
    records = example_records(5)
    assert len(records) == 8  # 4 step sizes x (EEDS, explicit Euler)
    by = {(r.method, r.h): r for r in records}
    for h in (0.1, 1.0, 2.0, 5.0):
        assert by[(MethodId.EEDS, h)].error < 1e-1
    e2 = by[(MethodId.EXPLICIT_EULER, 2.0)].error
    assert not math.isfinite(e2) or e2 > 1e2


def test_run_table_writes_file(tmp_path):
    out = tmp_path / "t4.csv"
    records = run_table(4, out_path=str(out), fmt="csv")
    text = out.read_text()
    assert text.startswith(CSV_HEADER)
    assert len(text.strip().split("\n")) == len(records) + 1


def test_unknown_table_and_example():
    with pytest.raises(ValueError):
        table_records(5)
    with pytest.raises(ValueError):
        example_records(6)

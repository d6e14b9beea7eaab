"""Benchmark cells and full error tables.

A cell integrates one problem with one method at one (T, h) pair and
reports a scalar error against the problem's registered closed-form
solution (not the exponential oracle):

    final-sum  |x_N - x(T)| + |y_N - y(T)| + |z_N - z(T)|
    max-sum    max over grid points of the same componentwise sum

Table 3 runs the tunable rotation problem (example3 with lambda = 1/T)
under the final-sum metric; Table 4 runs the stiff diagonal problem
(example4) under the max-sum metric. Grids reach N = 1e7 steps, so the
inner iteration is JIT-compiled; kernels run the plain sequential
recurrence (no fastmath), keeping results deterministic.

Cells whose trajectory overflows record inf/nan sentinels instead of
raising.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass

import numpy as np
from numba import njit

from .baselines import MethodId, baseline_transfer
from .errors import GridMismatch
from .nsfd import QuasiLinearProblem, nsfd_integrate, rk4_reference
from .problems import LinearProblem, example3, example4, example5, get_problem
from .scheme import TransferMatrix


class ErrorMetric(enum.Enum):
    FINAL_SUM = "final_sum"
    MAX_SUM = "max_sum"


@dataclass(frozen=True)
class BenchRecord:
    method: MethodId
    T: float
    lam: float
    h: float
    error: float
    wall_time: float


TABLE3_METHODS = (
    MethodId.IEDS,
    MethodId.EEDS,
    MethodId.RK4,
    MethodId.TAYLOR5,
    MethodId.TRAPEZOIDAL,
)
TABLE4_METHODS = (
    MethodId.IEDS,
    MethodId.EEDS,
    MethodId.RK4,
    MethodId.TAYLOR5,
    MethodId.RADAU_IIA5,
)

# (T, lambda, step sizes); lambda = 1/T throughout.
TABLE3_BLOCKS: tuple[tuple[float, float, tuple[float, ...]], ...] = (
    (1.0, 1.0, (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0)),
    (1e1, 1e-1, (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1)),
    (1e2, 1e-2, (1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2)),
    (1e3, 1e-3, (1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3)),
    (1e4, 1e-4, (1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4)),
    (1e5, 1e-5, (1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4, 1e5)),
)

# (T, step sizes)
TABLE4_BLOCKS: tuple[tuple[float, tuple[float, ...]], ...] = (
    (1e-3, (1e-6, 1e-5, 1e-4, 1e-3)),
    (1e-2, (1e-6, 1e-5, 1e-4, 1e-3, 1e-2)),
    (1e-1, (1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1)),
    (1.0, (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0)),
)


def steps_for(t_final: float, h: float) -> int:
    """T/h as an integer; GridMismatch unless it is one within 1e-9."""
    ratio = t_final / h
    n = round(ratio)
    if n < 1 or abs(ratio - n) > 1e-9 * max(1.0, abs(ratio)):
        raise GridMismatch(f"T/h = {ratio!r} is not a positive integer")
    return n


@njit(cache=True)
def _iter_final(q, x, n):
    x0, x1, x2 = x[0], x[1], x[2]
    for _ in range(n):
        y0 = q[0, 0] * x0 + q[0, 1] * x1 + q[0, 2] * x2
        y1 = q[1, 0] * x0 + q[1, 1] * x1 + q[1, 2] * x2
        y2 = q[2, 0] * x0 + q[2, 1] * x1 + q[2, 2] * x2
        x0, x1, x2 = y0, y1, y2
    return np.array([x0, x1, x2])


@njit(cache=True)
def _iter_max_diag(q, x, n, h, mu, c):
    x0, x1, x2 = x[0], x[1], x[2]
    worst = 0.0
    for k in range(1, n + 1):
        y0 = q[0, 0] * x0 + q[0, 1] * x1 + q[0, 2] * x2
        y1 = q[1, 0] * x0 + q[1, 1] * x1 + q[1, 2] * x2
        y2 = q[2, 0] * x0 + q[2, 1] * x1 + q[2, 2] * x2
        x0, x1, x2 = y0, y1, y2
        t = k * h
        err = (
            abs(x0 - c[0] * math.exp(mu[0] * t))
            + abs(x1 - c[1] * math.exp(mu[1] * t))
            + abs(x2 - c[2] * math.exp(mu[2] * t))
        )
        if err > worst or err != err:
            worst = err
            if err != err:
                break
    return worst


def _final_sum_error(problem: LinearProblem, q: TransferMatrix, n: int,
                     t_final: float) -> float:
    with np.errstate(over="ignore", invalid="ignore"):
        x = _iter_final(np.ascontiguousarray(q.q), problem.x0, n)
        return float(np.sum(np.abs(x - problem.exact(t_final))))


def _max_sum_error(problem: LinearProblem, q: TransferMatrix, n: int,
                   h: float) -> float:
    with np.errstate(over="ignore", invalid="ignore"):
        if problem.diag_exp is not None:
            mu, c = problem.diag_exp
            return float(
                _iter_max_diag(
                    np.ascontiguousarray(q.q), problem.x0, n, h,
                    np.asarray(mu), np.asarray(c),
                )
            )
        x = problem.x0.copy()
        worst = 0.0
        for k in range(1, n + 1):
            x = q.q @ x
            err = float(np.sum(np.abs(x - problem.exact(k * h))))
            if math.isnan(err):
                return err
            worst = max(worst, err)
        return worst


def run_cell(problem: LinearProblem, method: MethodId, t_final: float,
             h: float, metric: ErrorMetric) -> BenchRecord:
    """Evaluate one benchmark cell; overflowed trajectories yield
    inf/nan errors rather than an exception."""
    n = steps_for(t_final, h)
    start = time.perf_counter()
    q = baseline_transfer(problem.A, h, method)
    if metric is ErrorMetric.FINAL_SUM:
        err = _final_sum_error(problem, q, n, t_final)
    else:
        err = _max_sum_error(problem, q, n, h)
    wall = time.perf_counter() - start
    return BenchRecord(
        method=method, T=t_final, lam=problem.lam, h=h, error=err, wall_time=wall
    )


def _euler_quasilinear(p: QuasiLinearProblem, n: int) -> np.ndarray:
    a = np.asarray(p.A, dtype=float)
    h = p.T / n
    v = np.asarray(p.v0, dtype=float).copy()
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(n):
            v = v + h * (a @ v + np.asarray(p.g(k * h, v), dtype=float))
    return v


def table_records(table_id: int) -> list[BenchRecord]:
    """All cells of the named error table in canonical order: blocks as
    published, step sizes ascending, methods in column order."""
    records: list[BenchRecord] = []
    if table_id == 3:
        for t_final, lam, hs in TABLE3_BLOCKS:
            problem = example3(lam)
            for h in hs:
                for method in TABLE3_METHODS:
                    records.append(
                        run_cell(problem, method, t_final, h, ErrorMetric.FINAL_SUM)
                    )
    elif table_id == 4:
        problem = example4()
        for t_final, hs in TABLE4_BLOCKS:
            for h in hs:
                for method in TABLE4_METHODS:
                    records.append(
                        run_cell(problem, method, t_final, h, ErrorMetric.MAX_SUM)
                    )
    else:
        raise ValueError(f"unknown table {table_id!r}; expected 3 or 4")
    return records


def example_records(number: int) -> list[BenchRecord]:
    """A compact benchmark sweep for one worked example."""
    if number in (1, 2):
        problem = get_problem(f"example{number}")
        records = []
        for h in (1e-3, 1e-2, 1e-1, 1.0):
            for method in TABLE3_METHODS:
                records.append(run_cell(problem, method, 10.0, h, ErrorMetric.FINAL_SUM))
        return records
    if number == 3:
        t_final, lam, hs = TABLE3_BLOCKS[0]
        problem = example3(lam)
        return [
            run_cell(problem, method, t_final, h, ErrorMetric.FINAL_SUM)
            for h in hs for method in TABLE3_METHODS
        ]
    if number == 4:
        t_final, hs = TABLE4_BLOCKS[-1]
        problem = example4()
        return [
            run_cell(problem, method, t_final, h, ErrorMetric.MAX_SUM)
            for h in hs for method in TABLE4_METHODS
        ]
    if number == 5:
        p = example5()
        ref = rk4_reference(p, p.T, 50_000)
        records = []
        for h in (0.1, 1.0, 2.0, 5.0):
            n = steps_for(p.T, h)
            for method in (MethodId.EEDS, MethodId.EXPLICIT_EULER):
                start = time.perf_counter()
                if method is MethodId.EEDS:
                    try:
                        v = nsfd_integrate(p, n).final
                    except OverflowError:
                        v = np.full(3, np.inf)
                else:
                    v = _euler_quasilinear(p, n)
                with np.errstate(invalid="ignore"):
                    err = float(np.sum(np.abs(v - ref)))
                records.append(BenchRecord(
                    method=method, T=p.T, lam=float("nan"), h=h, error=err,
                    wall_time=time.perf_counter() - start,
                ))
        return records
    raise ValueError(f"unknown example {number!r}; expected 1..5")


CSV_HEADER = "method,T,lambda,h,error,wall_time"


def records_csv(records: list[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.method.value},{r.T!r},{r.lam!r},{r.h!r},{r.error!r},{r.wall_time!r}"
        )
    return "\n".join(lines) + "\n"


def records_json(records: list[BenchRecord]) -> str:
    import json

    payload = [
        {
            "method": r.method.value,
            "T": r.T,
            "lambda": r.lam,
            "h": r.h,
            "error": r.error,
            "wall_time": r.wall_time,
        }
        for r in records
    ]
    return json.dumps({"records": payload}, indent=2) + "\n"


def run_table(table_id: int, out_path=None, fmt: str = "csv") -> list[BenchRecord]:
    """Evaluate a full table and optionally write it to out_path."""
    records = table_records(table_id)
    if out_path is not None:
        text = records_csv(records) if fmt == "csv" else records_json(records)
        with open(out_path, "w") as fh:
            fh.write(text)
    return records

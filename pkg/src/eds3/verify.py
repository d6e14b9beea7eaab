"""Randomized exactness verification.

Draws random coefficient matrices (dense uniform entries plus structured
draws covering every Jordan shape: distinct, distinct-with-zero, complex
pair, repeated semisimple, repeated defective, triple defective) and
checks that both schemes reproduce the matrix-exponential trajectory to
tolerance over many steps.

Reference states use exp(A kh) assembled from binary powers, each power
computed by a fresh scaled-and-squared exponential, so the reference is
independent of the scheme construction path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Eds3Error
from .linalg import expm
from .params import SchemeKind
from .scheme import transfer

JORDAN_SHAPES = (
    "distinct",
    "distinct_zero",
    "complex_pair",
    "double_semisimple",
    "double_defective",
    "triple_defective",
)

_MIN_GAP = 0.15


@dataclass(frozen=True)
class SweepReport:
    cases: int
    comparisons: int
    worst_rel: float
    worst_label: str
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def random_matrix(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-2.0, 2.0, size=(3, 3))


def _separated(rng: np.random.Generator, count: int,
               avoid_zero: bool = False) -> list[float]:
    """Values in [-2, 2] pairwise at least _MIN_GAP apart (and away from
    zero when asked), by rejection."""
    while True:
        vals = [float(v) for v in rng.uniform(-2.0, 2.0, size=count)]
        probe = vals + ([0.0] if avoid_zero else [])
        gaps = [
            abs(probe[i] - probe[j])
            for i in range(len(probe))
            for j in range(i + 1, len(probe))
        ]
        if min(gaps) >= _MIN_GAP:
            return vals


def jordan_matrix(rng: np.random.Generator, shape: str) -> np.ndarray:
    """Orthogonal similarity transform of a canonical-form matrix with
    the requested eigenvalue structure."""
    if shape == "distinct":
        l1, l2, l3 = _separated(rng, 3)
        j = np.diag([l1, l2, l3])
    elif shape == "distinct_zero":
        l2, l3 = _separated(rng, 2, avoid_zero=True)
        j = np.diag([0.0, l2, l3])
    elif shape == "complex_pair":
        alpha = float(rng.uniform(-2.0, 2.0))
        beta = float(rng.uniform(_MIN_GAP, 2.0))
        lam = float(rng.uniform(-2.0, 2.0))
        j = np.array([[alpha, beta, 0.0], [-beta, alpha, 0.0], [0.0, 0.0, lam]])
    elif shape == "double_semisimple":
        l1, l2 = _separated(rng, 2)
        j = np.diag([l1, l1, l2])
    elif shape == "double_defective":
        l1, l2 = _separated(rng, 2)
        j = np.array([[l1, 1.0, 0.0], [0.0, l1, 0.0], [0.0, 0.0, l2]])
    elif shape == "triple_defective":
        lam = float(rng.uniform(-2.0, 2.0))
        j = lam * np.eye(3) + np.diag([1.0, 1.0], k=1)
    else:
        raise ValueError(f"unknown shape {shape!r}")
    q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    return q @ j @ q.T


def _reference_states(a: np.ndarray, h: float, x0: np.ndarray,
                      n_steps: int) -> np.ndarray:
    """states[k] = exp(A kh) x0 via binary powers, each power an
    independent exponential evaluation."""
    powers = []
    span = 1
    while span <= n_steps:
        powers.append(expm(a, h * span))
        span *= 2
    states = np.empty((n_steps + 1, 3))
    states[0] = x0
    for k in range(1, n_steps + 1):
        acc = None
        bits, idx = k, 0
        while bits:
            if bits & 1:
                acc = powers[idx] if acc is None else powers[idx] @ acc
            bits >>= 1
            idx += 1
        states[k] = acc @ x0
    return states


def _check_case(a: np.ndarray, x0: np.ndarray, label: str,
                hs: tuple[float, ...], n_steps: int, tol: float,
                report: dict) -> None:
    for h in hs:
        ref = _reference_states(a, h, x0, n_steps)
        for kind in (SchemeKind.IMPLICIT, SchemeKind.EXPLICIT):
            tag = f"{label} h={h} {kind.value}"
            try:
                q = transfer(a, h, kind)
            except (Eds3Error, OverflowError) as exc:
                report["failures"].append(f"{tag}: {type(exc).__name__}: {exc}")
                continue
            x = x0.copy()
            for k in range(1, n_steps + 1):
                x = q.q @ x
                denom = max(1.0, float(np.max(np.abs(ref[k]))))
                rel = float(np.max(np.abs(x - ref[k]))) / denom
                report["comparisons"] += 1
                if rel > report["worst_rel"]:
                    report["worst_rel"] = rel
                    report["worst_label"] = f"{tag} step={k}"
                if not rel <= tol:
                    report["failures"].append(f"{tag} step={k}: rel={rel:.3e}")
                    break


def exactness_sweep(seed: int = 0, random_cases: int = 500,
                    jordan_cases: int = 102, hs: tuple[float, ...] = (0.01, 0.1, 1.0),
                    n_steps: int = 100, tol: float = 1e-9) -> SweepReport:
    """Run the full sweep; the report lists every (case, h, scheme) whose
    trajectory drifts past `tol` relative to the exponential reference."""
    rng = np.random.default_rng(seed)
    report = {"comparisons": 0, "worst_rel": 0.0, "worst_label": "",
              "failures": []}
    cases = 0
    for i in range(random_cases):
        a = random_matrix(rng)
        x0 = rng.standard_normal(3)
        _check_case(a, x0, f"random[{i}]", hs, n_steps, tol, report)
        cases += 1
    for i in range(jordan_cases):
        shape = JORDAN_SHAPES[i % len(JORDAN_SHAPES)]
        a = jordan_matrix(rng, shape)
        x0 = rng.standard_normal(3)
        _check_case(a, x0, f"{shape}[{i}]", hs, n_steps, tol, report)
        cases += 1
    return SweepReport(
        cases=cases,
        comparisons=report["comparisons"],
        worst_rel=report["worst_rel"],
        worst_label=report["worst_label"],
        failures=tuple(report["failures"]),
    )


def format_report(rep: SweepReport) -> str:
    lines = [
        f"cases run          {rep.cases}",
        f"state comparisons  {rep.comparisons}",
        f"worst relative err {rep.worst_rel:.3e}  ({rep.worst_label})",
        f"failures           {len(rep.failures)}",
    ]
    lines.extend(f"  {f}" for f in rep.failures[:20])
    if len(rep.failures) > 20:
        lines.append(f"  ... and {len(rep.failures) - 20} more")
    lines.append("result: " + ("PASS" if rep.passed else "FAIL"))
    return "\n".join(lines)

"""Registry of the worked example systems with their closed-form
solutions, plus matrix parsing for the CLI.

example1  rotation + decay mix, spectrum {-1, +/-i}
example2  rank-deficient system, spectrum {0, 0, -1}
example3  decoupled rotation with a tunable real mode lambda
example4  stiff diagonal system diag(-1, -2, -100)
example5  quasi-linear decay problem (no closed form; see nsfd module)
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .linalg import as_matrix3, as_vec3
from .nsfd import QuasiLinearProblem


@dataclass(frozen=True)
class LinearProblem:
    """x' = A x with a known closed-form solution.

    diag_exp, when set, records that the solution is componentwise
    c_i * e^(mu_i t); the benchmark uses it for a fast max-error scan.
    lam is the problem's tunable knob where one exists (example3).
    """

    name: str
    A: np.ndarray
    x0: np.ndarray
    exact: Callable[[float], np.ndarray]
    lam: float = float("nan")
    diag_exp: tuple[tuple[float, float, float], tuple[float, float, float]] | None = None


def example1() -> LinearProblem:
    a = as_matrix3([[21.0, -8.0, -19.0], [18.0, -7.0, -15.0], [16.0, -6.0, -15.0]])
    x0 = as_vec3([0.0, -50.0, 50.0])

    def exact(t: float) -> np.ndarray:
        e = math.exp(-t)
        c = math.cos(t)
        s = math.sin(t)
        return np.array([
            100.0 * e - 100.0 * c - 450.0 * s,
            150.0 * c - 200.0 * e - 600.0 * s,
            200.0 * e - 150.0 * c - 250.0 * s,
        ])

    return LinearProblem(name="example1", A=a, x0=x0, exact=exact)


def example2() -> LinearProblem:
    a = as_matrix3([[3.0, -1.0, -3.0], [-6.0, 2.0, 6.0], [6.0, -2.0, -6.0]])
    x0 = as_vec3([0.0, -40.0, 50.0])

    def exact(t: float) -> np.ndarray:
        e = math.exp(-t)
        return np.array([110.0 * e - 110.0, 180.0 - 220.0 * e, 220.0 * e - 170.0])

    return LinearProblem(name="example2", A=a, x0=x0, exact=exact)


def example3(lam: float = 1.0) -> LinearProblem:
    a = as_matrix3([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, lam]])
    x0 = as_vec3([1.0, 0.0, 1.0])

    def exact(t: float) -> np.ndarray:
        return np.array([math.cos(t), math.sin(t), math.exp(lam * t)])

    return LinearProblem(name="example3", A=a, x0=x0, exact=exact, lam=lam)


def example4() -> LinearProblem:
    mus = (-1.0, -2.0, -100.0)
    a = np.diag(mus)
    x0 = as_vec3([1.0, 1.0, 1.0])

    def exact(t: float) -> np.ndarray:
        return np.array([math.exp(-t), math.exp(-2.0 * t), math.exp(-100.0 * t)])

    return LinearProblem(
        name="example4", A=a, x0=x0, exact=exact, diag_exp=(mus, (1.0, 1.0, 1.0))
    )


def example5() -> QuasiLinearProblem:
    a = np.diag([-1.0, -2.0, -3.0])

    def g(t: float, v: np.ndarray) -> np.ndarray:
        return math.exp(-t) * np.sin(v) / (1.0 + t * t)

    return QuasiLinearProblem(A=a, g=g, v0=np.ones(3), T=50.0)


LINEAR_EXAMPLES: dict[str, Callable[..., LinearProblem]] = {
    "example1": example1,
    "example2": example2,
    "example3": example3,
    "example4": example4,
}


def get_problem(name: str, lam: float | None = None) -> LinearProblem:
    """Look up a linear example by name; lam applies to example3 only."""
    if name not in LINEAR_EXAMPLES:
        raise ValueError(
            f"unknown problem {name!r}; known: {sorted(LINEAR_EXAMPLES)}"
        )
    if name == "example3":
        return example3(1.0 if lam is None else lam)
    if lam is not None:
        raise ValueError(f"{name} has no lambda knob")
    return LINEAR_EXAMPLES[name]()


def parse_matrix(spec: str, lam: float | None = None) -> tuple[np.ndarray, LinearProblem | None]:
    """Resolve a CLI matrix argument.

    Accepts a named example (example1..example4, or 'zero' for the zero
    matrix), an inline 'a,b,c;d,e,f;g,h,i' literal, or a path to a JSON
    file with a "rows" key. Returns (A, problem-or-None).
    """
    if spec in LINEAR_EXAMPLES:
        p = get_problem(spec, lam)
        return p.A, p
    if spec == "zero":
        return np.zeros((3, 3)), None
    if ";" in spec:
        rows = [[float(x) for x in row.split(",")] for row in spec.split(";")]
        return as_matrix3(rows), None
    path = Path(spec)
    if path.exists():
        data = json.loads(path.read_text())
        rows = data["rows"] if isinstance(data, dict) else data
        return as_matrix3(rows), None
    raise ValueError(
        f"matrix spec {spec!r} is neither a known name, an inline matrix, "
        f"nor an existing file"
    )

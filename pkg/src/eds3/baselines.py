"""Classical one-step integrators for x' = Ax, expressed as transfer
matrices so benchmarks can iterate them exactly like the exact schemes.

For a linear constant-coefficient system every method here reduces to a
fixed matrix map per step:

    explicit Euler    I + hA
    implicit Euler    (I - hA)^-1
    trapezoidal       (I - hA/2)^-1 (I + hA/2)
    classical RK4     sum_{j=0..4} (hA)^j / j!
    Taylor            sum_{j=0..6} (hA)^j / j!
    Radau IIA (3st.)  I + h (b^T x I) (I - h A_rk x A)^-1 (1 x A)

The Taylor map keeps terms through (hA)^6/720; that is the truncation the
reference error tables were generated with, and the order tests expect
the matching sixth-order decay. Radau IIA uses the 3-stage fifth-order
tableau; its stages are obtained from one 9x9 solve.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import SingularMatrix, SingularStepMatrix
from .linalg import as_matrix3, solve3
from .params import SchemeKind
from .scheme import TransferMatrix, transfer


class MethodId(enum.Enum):
    EXPLICIT_EULER = "explicit_euler"
    IMPLICIT_EULER = "implicit_euler"
    TRAPEZOIDAL = "trapezoidal"
    RK4 = "rk4"
    TAYLOR5 = "taylor5"
    RADAU_IIA5 = "radau_iia5"
    IEDS = "ieds"
    EEDS = "eeds"


_SQRT6 = math.sqrt(6.0)

RADAU_A = np.array([
    [(88.0 - 7.0 * _SQRT6) / 360.0,
     (296.0 - 169.0 * _SQRT6) / 1800.0,
     (-2.0 + 3.0 * _SQRT6) / 225.0],
    [(296.0 + 169.0 * _SQRT6) / 1800.0,
     (88.0 + 7.0 * _SQRT6) / 360.0,
     (-2.0 - 3.0 * _SQRT6) / 225.0],
    [(16.0 - _SQRT6) / 36.0, (16.0 + _SQRT6) / 36.0, 1.0 / 9.0],
])
RADAU_B = np.array([(16.0 - _SQRT6) / 36.0, (16.0 + _SQRT6) / 36.0, 1.0 / 9.0])

_IMPLICIT_METHODS = frozenset(
    {MethodId.IMPLICIT_EULER, MethodId.TRAPEZOIDAL, MethodId.RADAU_IIA5}
)


def _taylor_map(m: np.ndarray, h: float, terms: int) -> np.ndarray:
    q = np.eye(3)
    t = np.eye(3)
    for j in range(1, terms + 1):
        t = (h / j) * (m @ t)
        q = q + t
    return q


def _solve_matrix(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    try:
        return np.column_stack([solve3(lhs, rhs[:, j]) for j in range(rhs.shape[1])])
    except SingularMatrix as exc:
        raise SingularStepMatrix(str(exc)) from exc


def radau_transfer_matrix(m: np.ndarray, h: float) -> np.ndarray:
    """Transfer matrix of the 3-stage Radau IIA method via its stage
    system: K = A (1 x I + h (A_rk x I) K) stacked over stages."""
    eye9 = np.eye(9)
    big = eye9 - h * np.kron(RADAU_A, m)
    rhs = np.vstack([m, m, m])
    try:
        k = np.linalg.solve(big, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularStepMatrix(f"Radau stage system singular: {exc}") from exc
    q = np.eye(3)
    for i in range(3):
        q = q + h * RADAU_B[i] * k[3 * i:3 * i + 3]
    return q


def baseline_transfer(a, h: float, method: MethodId,
                      cluster_tol: float | None = None) -> TransferMatrix:
    """One-step transfer matrix for the named method at step h.

    The exact-scheme ids delegate to the scheme constructor (with its
    exactness validation); the classical methods are approximate by
    design and are not validated against the exponential.
    """
    if method is MethodId.IEDS:
        return transfer(a, h, SchemeKind.IMPLICIT, cluster_tol)
    if method is MethodId.EEDS:
        return transfer(a, h, SchemeKind.EXPLICIT, cluster_tol)

    m = as_matrix3(a)
    eye = np.eye(3)
    if method is MethodId.EXPLICIT_EULER:
        q = eye + h * m
    elif method is MethodId.IMPLICIT_EULER:
        q = _solve_matrix(eye - h * m, eye)
    elif method is MethodId.TRAPEZOIDAL:
        q = _solve_matrix(eye - (h / 2.0) * m, eye + (h / 2.0) * m)
    elif method is MethodId.RK4:
        q = _taylor_map(m, h, 4)
    elif method is MethodId.TAYLOR5:
        q = _taylor_map(m, h, 6)
    elif method is MethodId.RADAU_IIA5:
        q = radau_transfer_matrix(m, h)
    else:
        raise ValueError(f"unknown method {method!r}")
    kind = SchemeKind.IMPLICIT if method in _IMPLICIT_METHODS else SchemeKind.EXPLICIT
    return TransferMatrix(q=q, h=h, kind=kind, params=None)

"""Dense 3x3 linear algebra: validated constructors, a pivoted solve, and
a scaling-and-squaring matrix exponential.

Everything here is sized for 3x3 work; no attempt is made to be general.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix

# Hard singularity threshold for pivots. Anything this small is a true
# rank deficiency, not roundoff.
PIVOT_MIN = 1e-300

# Relative truncation for the exponential Taylor series after scaling.
EXPM_TRUNCATION = 1e-18
_EXPM_MAX_TERMS = 80


def as_matrix3(m) -> np.ndarray:
    """Validate and return a (3, 3) float64 array."""
    a = np.asarray(m, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def as_vec3(v) -> np.ndarray:
    """Validate and return a (3,) float64 array."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a length-3 vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("vector entries must be finite")
    return a


def inf_norm(m: np.ndarray) -> float:
    """Max absolute row sum (induced infinity norm)."""
    return float(np.max(np.sum(np.abs(m), axis=1)))


def solve3(m, b) -> np.ndarray:
    """Solve the 3x3 system m @ x = b by Gaussian elimination with
    partial pivoting.

    Accepts real or complex input; the result dtype follows the inputs.
    Raises SingularMatrix when a pivot magnitude falls below PIVOT_MIN.
    """
    dtype = np.result_type(np.asarray(m).dtype, np.asarray(b).dtype, np.float64)
    a = np.array(m, dtype=dtype)
    x = np.array(b, dtype=dtype)
    if a.shape != (3, 3) or x.shape != (3,):
        raise ValueError("solve3 expects a 3x3 matrix and a length-3 vector")

    for col in range(3):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) < PIVOT_MIN:
            raise SingularMatrix(f"pivot {abs(a[piv, col]):.3e} below {PIVOT_MIN:.0e}")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            x[[col, piv]] = x[[piv, col]]
        for row in range(col + 1, 3):
            f = a[row, col] / a[col, col]
            a[row, col:] -= f * a[col, col:]
            x[row] -= f * x[col]

    for col in (2, 1, 0):
        x[col] = (x[col] - a[col, col + 1:] @ x[col + 1:]) / a[col, col]
    return x


def expm(a, t: float = 1.0) -> np.ndarray:
    """Matrix exponential e^(a*t) for a 3x3 matrix.

    Scaling and squaring with a Taylor series: the scaled matrix has
    infinity norm <= 1, terms are accumulated until the next one falls
    below EXPM_TRUNCATION relative to the partial sum, then the result
    is squared back up. Raises OverflowError if the result overflows.
    """
    m = np.asarray(a, dtype=float) * t
    if m.shape != (3, 3):
        raise ValueError("expm expects a 3x3 matrix")
    norm = inf_norm(m)
    if not np.isfinite(norm):
        raise OverflowError("matrix norm is not finite")
    s = max(0, int(np.ceil(np.log2(norm)))) if norm > 0 else 0
    b = m / (2.0 ** s)

    term = np.eye(3)
    acc = np.eye(3)
    for k in range(1, _EXPM_MAX_TERMS + 1):
        term = (b @ term) / k
        acc = acc + term
        if inf_norm(term) < EXPM_TRUNCATION * inf_norm(acc):
            break

    for _ in range(s):
        acc = acc @ acc
    if not np.all(np.isfinite(acc)):
        raise OverflowError("matrix exponential overflowed")
    return acc

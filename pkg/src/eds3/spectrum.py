"""Eigenvalues of a real 3x3 matrix and their structural classification.

The characteristic cubic is solved in closed form (trigonometric /
Cardano on the depressed cubic, discriminant sign picks the branch),
each root gets one Newton polish on the monic cubic, and conjugate
symmetry of complex pairs holds by construction.

Classification clusters near-equal eigenvalues at a relative tolerance
and maps the spectrum onto one of five structural cases that the scheme
parameter formulas dispatch on. Within a merged cluster the
representative value is the arithmetic mean of its members.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousSpectrumWarning
from .linalg import as_matrix3

DEFAULT_CLUSTER_TOL = 1e-7


def char_poly(a) -> tuple[float, float, float]:
    """Coefficients (c2, c1, c0) of det(tI - A) = t^3 + c2 t^2 + c1 t + c0.

    c2 = -trace, c1 = sum of principal 2x2 minors, c0 = -det.
    """
    m = as_matrix3(a)
    c2 = -(m[0, 0] + m[1, 1] + m[2, 2])
    c1 = (
        m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
        + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
        + m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    )
    det = (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )
    return float(c2), float(c1), float(-det)


def _cubic_roots(c2: float, c1: float, c0: float) -> list[complex]:
    """Roots of t^3 + c2 t^2 + c1 t + c0, conjugate-symmetric when complex."""
    # Depressed cubic y^3 + p y + q via t = y - c2/3.
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3

    if disc > 0.0:
        # One real root, one complex pair.
        r = math.sqrt(disc)
        u = math.copysign(abs(-q / 2.0 + r) ** (1.0 / 3.0), -q / 2.0 + r)
        v = math.copysign(abs(-q / 2.0 - r) ** (1.0 / 3.0), -q / 2.0 - r)
        y_real = u + v
        re = -y_real / 2.0
        im = (math.sqrt(3.0) / 2.0) * (u - v)
        roots = [complex(y_real, 0.0), complex(re, im), complex(re, -im)]
    elif disc < 0.0:
        # Three distinct real roots (requires p < 0 here).
        rho = math.sqrt(-p / 3.0)
        arg = (-q / 2.0) / rho ** 3
        arg = min(1.0, max(-1.0, arg))
        phi = math.acos(arg)
        roots = [
            complex(2.0 * rho * math.cos((phi + 2.0 * math.pi * k) / 3.0), 0.0)
            for k in range(3)
        ]
    else:
        if p == 0.0:
            roots = [complex(0.0, 0.0)] * 3
        else:
            # Double root y = -3q/(2p), simple root y = 3q/p.
            roots = [
                complex(3.0 * q / p, 0.0),
                complex(-3.0 * q / (2.0 * p), 0.0),
                complex(-3.0 * q / (2.0 * p), 0.0),
            ]
    return [r - shift for r in roots]


def _polish(root: complex, c2: float, c1: float, c0: float) -> complex:
    """One Newton step on the monic cubic. More steps give no benefit and
    can cycle near multiple roots, so exactly one is taken."""
    f = ((root + c2) * root + c1) * root + c0
    df = (3.0 * root + 2.0 * c2) * root + c1
    if abs(df) < 1e-30:
        return root
    step = f / df
    if abs(step) > 1e-2 * max(1.0, abs(root)) or not cmath.isfinite(step):
        # A wild step means we are at a near-multiple root where Newton
        # is unreliable; keep the closed-form value.
        return root
    return root - step


@dataclass(frozen=True)
class Spectrum:
    """The three eigenvalues of a real 3x3 matrix.

    cluster_tol is the absolute clustering tolerance associated with this
    spectrum (relative default times the spectrum scale); classify() uses
    it when no explicit tolerance is passed.
    """

    lambda1: complex
    lambda2: complex
    lambda3: complex
    cluster_tol: float

    @property
    def values(self) -> tuple[complex, complex, complex]:
        return (self.lambda1, self.lambda2, self.lambda3)

    @property
    def scale(self) -> float:
        return max(1.0, max(abs(v) for v in self.values))


def eigenvalues3(a, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """Eigenvalues of a real 3x3 matrix via its characteristic cubic.

    Returned in a deterministic order (ascending real part, then
    imaginary part). Complex values occur in conjugate pairs exactly.
    """
    c2, c1, c0 = char_poly(a)
    roots = _cubic_roots(c2, c1, c0)
    scale0 = max(1.0, max(abs(z) for z in roots))

    # Newton polishing is only trustworthy for isolated roots: near a
    # multiple root the correction is evaluation noise over a tiny
    # derivative, and moving cluster members independently breaks the
    # exact root-sum identity the closed form guarantees (the sum is what
    # makes a merged cluster representative accurate).
    def _isolated(i: int) -> bool:
        return all(
            abs(roots[i] - roots[j]) >= 1e-3 * scale0
            for j in range(3) if j != i
        )

    polished = []
    for i, r in enumerate(roots):
        if r.imag == 0.0 and _isolated(i):
            pr = _polish(complex(r.real, 0.0), c2, c1, c0)
            polished.append(complex(pr.real, 0.0))
        else:
            polished.append(r)
    # Polish one member of a complex pair and mirror it, so conjugacy is
    # exact rather than approximate.
    cplx = [r for r in polished if r.imag != 0.0]
    if cplx:
        real_part = [r for r in polished if r.imag == 0.0]
        z = max(cplx, key=lambda r: r.imag)
        idx = next(i for i, r in enumerate(roots) if r == z or r == z.conjugate())
        if _isolated(idx):
            z = _polish(z, c2, c1, c0)
        polished = real_part + [z, z.conjugate()]

    polished.sort(key=lambda z: (z.real, z.imag))
    scale = max(1.0, max(abs(z) for z in polished))
    return Spectrum(*polished, cluster_tol=cluster_tol * scale)


class SpectrumClass:
    """Base class for the five structural spectrum cases."""

    __slots__ = ()

    @property
    def case_name(self) -> str:
        return type(self).__name__


@dataclass(frozen=True)
class DistinctReal(SpectrumClass):
    lambda1: float
    lambda2: float
    lambda3: float


@dataclass(frozen=True)
class DistinctRealWithZero(SpectrumClass):
    """One eigenvalue is zero (within tolerance); the other two are the
    stored nonzero pair."""

    lambda2: float
    lambda3: float


@dataclass(frozen=True)
class ComplexPairPlusReal(SpectrumClass):
    alpha: float
    beta: float
    lam: float


@dataclass(frozen=True)
class DoubleReal(SpectrumClass):
    repeated: float
    simple: float


@dataclass(frozen=True)
class TripleReal(SpectrumClass):
    value: float


def classify(s: Spectrum, tol: float | None = None) -> SpectrumClass:
    """Map a spectrum onto its structural case.

    tol is relative; the absolute tolerance is tol * max(1, max |lambda|).
    When omitted, the tolerance recorded on the spectrum applies. Chained
    near-ties (l1 ~ l2 ~ l3 but l1 !~ l3) are resolved by merging all
    three, with an AmbiguousSpectrumWarning, never a failure.
    """
    atol = s.cluster_tol if tol is None else tol * s.scale
    vals = list(s.values)

    if max(abs(v.imag) for v in vals) > atol:
        pair = sorted((v for v in vals if v.imag != 0.0), key=lambda z: z.imag)
        real = [v for v in vals if v.imag == 0.0]
        if len(pair) != 2 or not real:
            # Cannot happen for a real matrix (one root is always real),
            # but keep the dispatch total.
            pair = sorted(vals, key=lambda z: abs(z.imag))[1:]
            real = [min(vals, key=lambda z: abs(z.imag))]
        return ComplexPairPlusReal(
            alpha=float(pair[1].real),
            beta=float(abs(pair[1].imag)),
            lam=float(real[0].real),
        )

    r = sorted(v.real for v in vals)
    gap01 = r[1] - r[0]
    gap12 = r[2] - r[1]
    near01 = gap01 <= atol
    near12 = gap12 <= atol

    if near01 and near12:
        if r[2] - r[0] > atol:
            warnings.warn(
                "eigenvalue clustering is order-dependent; merging all three",
                AmbiguousSpectrumWarning,
                stacklevel=2,
            )
        return TripleReal(value=float(sum(r) / 3.0))
    if near01:
        return DoubleReal(repeated=float((r[0] + r[1]) / 2.0), simple=float(r[2]))
    if near12:
        return DoubleReal(repeated=float((r[1] + r[2]) / 2.0), simple=float(r[0]))

    zero = [abs(v) <= atol for v in r]
    nzero = sum(zero)
    if nzero == 1:
        rest = [v for v, z in zip(r, zero) if not z]
        return DistinctRealWithZero(lambda2=float(rest[0]), lambda3=float(rest[1]))
    if nzero >= 2:
        # Two distinct values each within tol of zero: zero-snapping would
        # collide them, so treat them as a merged double at 0.
        warnings.warn(
            "two eigenvalues lie within the zero tolerance; merging them",
            AmbiguousSpectrumWarning,
            stacklevel=2,
        )
        rest = [v for v, z in zip(r, zero) if not z]
        pair = [v for v, z in zip(r, zero) if z]
        return DoubleReal(repeated=float(sum(pair) / len(pair)), simple=float(rest[0]))
    return DistinctReal(lambda1=float(r[0]), lambda2=float(r[1]), lambda3=float(r[2]))

"""Scheme parameters (psi, phi, theta) for the implicit and explicit
exact one-step forms.

Implicit form:  (x_{k+1} - psi*x_k)/phi = A*(theta*x_{k+1} + (1-theta)*x_k)
Explicit form:  (x_{k+1} - psi*x_k)/phi = A*x_k + theta*phi*A^2*x_k

The parameters depend only on the eigenvalue structure and the step h.
One closed-form operation exists per structural case; the distinct-flavor
operations self-delegate to a linear-solve fallback when a guarded
denominator vanishes or their condition-system residual check fails.
Merged double/triple cases have no fallback (the fallback's linear system
is singular there by construction) and raise ParamSingularity instead.

Every e^x - 1 is evaluated with expm1, and differences of exponentials
are factored as e^(bh) * expm1((a-b)h) to avoid cancellation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParamSingularity
from .spectrum import (
    ComplexPairPlusReal,
    DistinctReal,
    DistinctRealWithZero,
    DoubleReal,
    SpectrumClass,
    TripleReal,
)
from .linalg import solve3
from .errors import SingularMatrix

# Relative residual above which a parameter triple is rejected.
RESIDUAL_TOL = 1e-11

# |lambda| at or below ZERO_TOL_REL * max(1, scale) is treated as exactly 0.
ZERO_TOL_REL = 1e-10

# Guard for denominators that vanish structurally (poles of the formulas).
_DEN_MIN = 1e-12


class SchemeKind(enum.Enum):
    IMPLICIT = "implicit"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SchemeParams:
    psi: float
    phi: float
    theta: float
    h: float
    kind: SchemeKind


def _zero_tol(*values: float) -> float:
    scale = max([1.0] + [abs(v) for v in values])
    return ZERO_TOL_REL * scale


def _exp_diff(a: float, b: float, h: float) -> float:
    """e^(a*h) - e^(b*h) without cancellation for a ~ b."""
    return math.exp(b * h) * math.expm1((a - b) * h)


def class_eigenvalues(sc: SpectrumClass) -> tuple[complex, complex, complex]:
    """The eigenvalue multiset a structural case stands for."""
    if isinstance(sc, DistinctReal):
        return (complex(sc.lambda1), complex(sc.lambda2), complex(sc.lambda3))
    if isinstance(sc, DistinctRealWithZero):
        return (0j, complex(sc.lambda2), complex(sc.lambda3))
    if isinstance(sc, ComplexPairPlusReal):
        return (
            complex(sc.alpha, sc.beta),
            complex(sc.alpha, -sc.beta),
            complex(sc.lam),
        )
    if isinstance(sc, DoubleReal):
        return (complex(sc.repeated), complex(sc.repeated), complex(sc.simple))
    if isinstance(sc, TripleReal):
        return (complex(sc.value),) * 3
    raise TypeError(f"unknown spectrum class {type(sc).__name__}")


# ----------------------------------------------------------------------
# Condition-system residuals


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _implicit_point(p: SchemeParams, lam: complex) -> float:
    e = np.exp(lam * p.h)
    den = 1.0 - p.phi * lam * p.theta
    # A pole of the rational map sitting on an eigenvalue makes the
    # cross-multiplied condition degenerate to 0 = 0 while the scheme is
    # wrong there; treat it as an outright failure.
    if abs(den) <= 1e-13 * max(1.0, abs(p.phi * lam * p.theta)):
        return math.inf
    lhs = p.psi + p.phi * lam * (1.0 - p.theta)
    rhs = e * den
    return _rel(lhs, rhs)


def _explicit_point(p: SchemeParams, lam: complex) -> float:
    e = np.exp(lam * p.h)
    lhs = p.psi + p.phi * lam + p.theta * p.phi ** 2 * lam ** 2
    return _rel(lhs, e)


def residuals(p: SchemeParams, sc: SpectrumClass) -> np.ndarray:
    """Relative residuals of the condition system that defines (psi, phi,
    theta) for this structural case. Repeated eigenvalues contribute
    derivative conditions in place of duplicate value conditions."""
    psi, phi, th, h = p.psi, p.phi, p.theta, p.h
    if p.kind is SchemeKind.IMPLICIT:
        if isinstance(sc, DoubleReal):
            l1, l2 = sc.repeated, sc.simple
            e1 = math.exp(l1 * h)
            d = phi * (1.0 - th + psi * th)
            return np.array([
                _implicit_point(p, l2),
                _implicit_point(p, l1),
                _rel(d, h * e1 * (1.0 - phi * l1 * th) ** 2),
            ])
        if isinstance(sc, TripleReal):
            lam = sc.value
            e = math.exp(lam * h)
            d = phi * (1.0 - th + psi * th)
            return np.array([
                _implicit_point(p, lam),
                _rel(d, h * e * (1.0 - phi * lam * th) ** 2),
                _rel(phi * th * d, 0.5 * h * h * e * (1.0 - phi * lam * th) ** 3),
            ])
        return np.array([_implicit_point(p, z) for z in class_eigenvalues(sc)])

    if isinstance(sc, DoubleReal):
        l1, l2 = sc.repeated, sc.simple
        e1 = math.exp(l1 * h)
        return np.array([
            _explicit_point(p, l1),
            _explicit_point(p, l2),
            _rel(phi + 2.0 * l1 * th * phi ** 2, h * e1),
        ])
    if isinstance(sc, TripleReal):
        lam = sc.value
        e = math.exp(lam * h)
        return np.array([
            _explicit_point(p, lam),
            _rel(phi + 2.0 * lam * th * phi ** 2, h * e),
            _rel(th * phi ** 2, 0.5 * h * h * e),
        ])
    return np.array([_explicit_point(p, z) for z in class_eigenvalues(sc)])


def _checked(p: SchemeParams, sc: SpectrumClass) -> SchemeParams:
    if not (np.isfinite(p.psi) and np.isfinite(p.phi) and np.isfinite(p.theta)):
        raise ParamSingularity(f"non-finite parameters for {sc.case_name}")
    worst = float(np.max(residuals(p, sc)))
    if worst > RESIDUAL_TOL:
        raise ParamSingularity(
            f"condition residual {worst:.3e} exceeds {RESIDUAL_TOL:.0e} "
            f"for {sc.case_name} at h={p.h!r}"
        )
    return p


# ----------------------------------------------------------------------
# Implicit closed forms


def ieds_distinct(l1: float, l2: float, l3: float, h: float) -> SchemeParams:
    """Implicit parameters for three distinct real eigenvalues."""
    sc = DistinctReal(l1, l2, l3)
    try:
        e1, e2, e3 = (math.exp(l * h) for l in (l1, l2, l3))
        # Factored differences d_jk = e^(l_j h) - e^(l_k h).
        d12 = _exp_diff(l1, l2, h)
        d23 = _exp_diff(l2, l3, h)
        d31 = _exp_diff(l3, l1, h)
        t1 = l1 * d23 + l2 * d31 + l3 * d12
        t2 = (
            l1 * (1.0 - e1) * d23
            + l2 * (1.0 - e2) * d31
            + l3 * (1.0 - e3) * d12
        )
        if abs(t2) < _DEN_MIN * max(abs(t1), 1e-30):
            raise ParamSingularity("t2 denominator vanished")
        theta = t1 / t2
        c1 = l2 - l1 + l1 * e1 - l2 * e2
        den = l1 - l2 + theta * c1
        if abs(den) < _DEN_MIN * max(1.0, abs(l1 - l2)):
            raise ParamSingularity("phi denominator vanished")
        phi = d12 / den
        psi = e3 - phi * l3 * (e3 * theta + 1.0 - theta)
        return _checked(
            SchemeParams(psi, phi, theta, h, SchemeKind.IMPLICIT), sc
        )
    except ParamSingularity:
        return _checked(ieds_fallback(l1, l2, l3, h), sc)


def ieds_with_zero(l2: float, l3: float, h: float) -> SchemeParams:
    """Implicit parameters for a spectrum {0, l2, l3} with l2, l3 nonzero
    and distinct; psi is exactly 1 and phi, theta come from the nonzero
    pair."""
    sc = DistinctRealWithZero(l2, l3)
    try:
        f2 = math.expm1(l2 * h)
        f3 = math.expm1(l3 * h)
        d23 = _exp_diff(l2, l3, h)
        den_phi = l2 * l3 * d23
        if abs(den_phi) < _DEN_MIN * max(abs(f2 * f3), 1e-30):
            raise ParamSingularity("with-zero phi denominator vanished")
        phi = (l2 - l3) * f2 * f3 / den_phi
        den_th = (l2 - l3) * f2 * f3
        if abs(den_th) < _DEN_MIN:
            raise ParamSingularity("with-zero theta denominator vanished")
        theta = (l3 * f2 - l2 * f3) / den_th
        return _checked(
            SchemeParams(1.0, phi, theta, h, SchemeKind.IMPLICIT), sc
        )
    except ParamSingularity:
        return _checked(ieds_fallback(0.0, l2, l3, h), sc)


def ieds_complex(alpha: float, beta: float, lam: float, h: float) -> SchemeParams:
    """Implicit parameters for a conjugate pair alpha +/- i*beta (beta > 0)
    plus a real eigenvalue lam, in real arithmetic."""
    sc = ComplexPairPlusReal(alpha, beta, lam)
    try:
        # Work with deviations from 1 (expm1, cos - 1) so that every
        # intermediate scales with h; the raw exp/cos values all sit near
        # 1 at small h and their rounding alone would swamp theta, whose
        # numerator and denominator are O(h^2).
        em_a = math.expm1(alpha * h)
        em_l = math.expm1(lam * h)
        s = math.sin(beta * h)
        cm = -2.0 * math.sin(0.5 * beta * h) ** 2  # cos(beta h) - 1
        ec1 = em_a + cm + em_a * cm  # e^(alpha h) cos(beta h) - 1
        eas = (1.0 + em_a) * s  # e^(alpha h) sin(beta h)
        el = 1.0 + em_l
        t1 = 2.0 * beta * (ec1 - em_l) + 2.0 * (lam - alpha) * eas
        t2 = 2.0 * (
            (alpha - lam) * em_l * eas
            - beta * (ec1 * ec1 - ec1 * em_l + eas * eas)
        )
        if abs(t2) < _DEN_MIN * max(abs(t1), 1e-30):
            raise ParamSingularity("t2 denominator vanished")
        theta = t1 / t2
        t3 = 2.0 * alpha * eas + 2.0 * beta * ec1
        den = 2.0 * beta + t3 * theta
        if abs(den) < _DEN_MIN * max(1.0, 2.0 * beta):
            raise ParamSingularity("phi denominator vanished")
        phi = 2.0 * eas / den
        psi = el - phi * lam * (el * theta + 1.0 - theta)
        return _checked(
            SchemeParams(psi, phi, theta, h, SchemeKind.IMPLICIT), sc
        )
    except ParamSingularity:
        return _checked(
            ieds_fallback(complex(alpha, beta), complex(alpha, -beta), lam, h), sc
        )


def _w_kernel(u: float) -> float:
    """u*e^u - expm1(u) without cancellation; the value is ~u^2/2 near 0."""
    if abs(u) >= 0.5:
        return u * math.exp(u) - math.expm1(u)
    total = 0.0
    power = u * u / 2.0  # u^k / k!, starting at k = 2
    for k in range(2, 30):
        total += (k - 1) * power
        power *= u / (k + 1)
        if abs(power * k) <= 1e-17 * abs(total):
            break
    return total


def double_roots(l1: float, l2: float, h: float) -> tuple[float, float]:
    """Roots (genuine, spurious) of the quadratic determining T = phi*theta
    for a repeated eigenvalue l1 with simple companion l2.

    The quadratic factors exactly with T = 1/l1 always a root, and that
    root is spurious: it puts the pole of the implicit rational map right
    on l1, where every cross-multiplied exactness condition degenerates to
    0 = 0. The genuine root is the cofactor, reduced to
        T = w(u) / (l1*u*e^u - l2*expm1(u)),   u = (l1 - l2)*h,
    with w(u) = u*e^u - expm1(u); this form stays accurate as h -> 0,
    where the direct quadratic coefficients cancel to O(h^2).
    """
    u = (l1 - l2) * h
    v = l1 * u * math.exp(u) - l2 * math.expm1(u)
    if v == 0.0:
        raise ParamSingularity(
            "double-case quadratic degenerates; the genuine root escapes "
            "to infinity"
        )
    return (_w_kernel(u) / v, 1.0 / l1)


def _ieds_double_from_t(l1: float, l2: float, h: float, t: float) -> SchemeParams:
    f1 = math.expm1(l1 * h)
    f2 = math.expm1(l2 * h)
    # e1 - e2 == f1 - f2, but the expm1 difference keeps the absolute
    # error proportional to h instead of ulp(1).
    d12 = f1 - f2
    gap = l1 - l2
    psi = 1.0 + (l1 * f2 - l2 * f1 + l1 * l2 * d12 * t) / gap
    phi = (d12 + (l2 * f2 - l1 * f1) * t) / gap
    if abs(phi) < 1e-300:
        raise ParamSingularity("phi vanished in double case")
    return SchemeParams(psi, phi, t / phi, h, SchemeKind.IMPLICIT)


def ieds_double(l1: float, l2: float, h: float) -> SchemeParams:
    """Implicit parameters for a repeated eigenvalue l1 and a simple one
    l2 (the minimal-polynomial degree-3 form, used for every double)."""
    sc = DoubleReal(l1, l2)
    if abs(l1) <= _zero_tol(l1, l2):
        f2 = math.expm1(l2 * h)
        den = l2 * h * f2
        if abs(den) < 1e-300:
            raise ParamSingularity("double-at-zero theta denominator vanished")
        theta = (f2 - l2 * h) / den
        return _checked(SchemeParams(1.0, h, theta, h, SchemeKind.IMPLICIT), sc)
    t, _ = double_roots(l1, l2, h)
    return _checked(_ieds_double_from_t(l1, l2, h, t), sc)


def ieds_triple(lam: float, h: float) -> SchemeParams:
    """Implicit parameters for a triple eigenvalue (pole at h = -2/lam)."""
    sc = TripleReal(lam)
    if abs(lam) <= _zero_tol(lam):
        return SchemeParams(1.0, h, 0.5, h, SchemeKind.IMPLICIT)
    den = lam * h + 2.0
    if abs(den) < _DEN_MIN:
        raise ParamSingularity(f"triple-case pole: lambda*h + 2 = {den:.3e}")
    e = math.exp(lam * h)
    psi = e * (2.0 - lam * h) / den
    phi = h * (e + 1.0) / den
    theta = 1.0 / (e + 1.0)
    return _checked(SchemeParams(psi, phi, theta, h, SchemeKind.IMPLICIT), sc)


def ieds_fallback(l1: complex, l2: complex, l3: complex, h: float) -> SchemeParams:
    """Linear-solve route for three pairwise-distinct (possibly complex)
    eigenvalues: solve for (psi, u2, u3) = (psi, phi, phi*theta) from
    psi + lam*u2 + lam*(e^(lam h) - 1)*u3 = e^(lam h)."""
    lams = np.array([l1, l2, l3], dtype=complex)
    es = np.exp(lams * h)
    m = np.column_stack([np.ones(3, dtype=complex), lams, lams * (es - 1.0)])
    try:
        u = solve3(m, es)
    except SingularMatrix as exc:
        raise ParamSingularity(f"fallback system singular: {exc}") from exc
    imag_scale = float(np.max(np.abs(u.imag)))
    if imag_scale > 1e-8 * max(1.0, float(np.max(np.abs(u)))):
        raise ParamSingularity("fallback solution has a large imaginary part")
    psi, phi, w = (float(v) for v in u.real)
    if abs(phi) < 1e-300:
        raise ParamSingularity("fallback phi vanished")
    return SchemeParams(psi, phi, w / phi, h, SchemeKind.IMPLICIT)


# ----------------------------------------------------------------------
# Explicit closed forms


def eeds_distinct(l1: float, l2: float, l3: float, h: float) -> SchemeParams:
    """Explicit parameters for three distinct real eigenvalues.

    (psi, phi, theta*phi^2) are the coefficients of the quadratic
    interpolating e^(lam h) at the eigenvalues, assembled from Newton
    divided differences. Every subtraction is then between nearby
    exponentials (kept accurate by _exp_diff / expm1), which keeps the
    parameters clean down to step sizes where psi - 1 underflows.
    """
    sc = DistinctReal(l1, l2, l3)
    scale = max(1.0, abs(l1), abs(l2), abs(l3))
    try:
        if min(abs(l1 - l2), abs(l2 - l3), abs(l3 - l1)) <= _DEN_MIN * scale:
            raise ParamSingularity("eigenvalue gap vanished")
        f12 = _exp_diff(l1, l2, h) / (l1 - l2)
        f23 = _exp_diff(l2, l3, h) / (l2 - l3)
        w = (f23 - f12) / (l3 - l1)
        phi = f12 - (l1 + l2) * w
        if abs(phi) < 1e-300:
            raise ParamSingularity("phi vanished")
        psi = 1.0 + (math.expm1(l1 * h) - l1 * f12 + l1 * l2 * w)
        return _checked(
            SchemeParams(psi, phi, w / (phi * phi), h, SchemeKind.EXPLICIT), sc
        )
    except ParamSingularity:
        return _checked(eeds_fallback(l1, l2, l3, h), sc)


def eeds_complex(alpha: float, beta: float, lam: float, h: float) -> SchemeParams:
    """Explicit parameters for eigenvalues alpha +/- i*beta and lam.

    Same divided-difference construction as eeds_distinct, reduced to
    real arithmetic: the difference across the conjugate pair is
    e^(alpha h) sin(beta h) / beta, and the second difference folds the
    pair's product (alpha - lam)^2 + beta^2 into one real division.
    """
    sc = ComplexPairPlusReal(alpha, beta, lam)
    d = alpha - lam
    r2 = d * d + beta * beta
    scale = max(1.0, abs(alpha), abs(beta), abs(lam))
    try:
        if abs(beta) <= _DEN_MIN * scale or r2 <= (_DEN_MIN * scale) ** 2:
            raise ParamSingularity("complex pair degenerate")
        em_a = math.expm1(alpha * h)
        em_l = math.expm1(lam * h)
        cm = -2.0 * math.sin(0.5 * beta * h) ** 2  # cos(beta h) - 1
        ec1 = em_a + cm + em_a * cm  # e^(alpha h) cos(beta h) - 1
        eas = (1.0 + em_a) * math.sin(beta * h)  # e^(alpha h) sin(beta h)
        f12 = eas / beta
        w = (d * f12 + em_l - ec1) / r2
        phi = f12 - 2.0 * alpha * w
        if abs(phi) < 1e-300:
            raise ParamSingularity("phi vanished")
        psi = 1.0 + (em_l - lam * phi - lam * lam * w)
        return _checked(
            SchemeParams(psi, phi, w / (phi * phi), h, SchemeKind.EXPLICIT), sc
        )
    except ParamSingularity:
        p = eeds_fallback(complex(alpha, beta), complex(alpha, -beta), lam, h)
        return _checked(p, sc)


def eeds_double(l1: float, l2: float, h: float) -> SchemeParams:
    """Explicit parameters for a repeated eigenvalue l1 and a simple l2."""
    sc = DoubleReal(l1, l2)
    if abs(l1) <= _zero_tol(l1, l2):
        theta = (math.expm1(l2 * h) - l2 * h) / (h * h * l2 * l2)
        return _checked(SchemeParams(1.0, h, theta, h, SchemeKind.EXPLICIT), sc)
    e1 = math.exp(l1 * h)
    u = (l1 - l2) * h
    # phi = ((l2^2-l1^2)h + 2 l1)e1 - 2 l1 e2, all over (l1-l2)^2, factored
    # through e^(l2 h) so the h -> 0 cancellation happens inside expm1.
    num = 2.0 * l1 * math.expm1(u) - (l1 + l2) * u * math.exp(u)
    phi = math.exp(l2 * h) * num / (l1 - l2) ** 2
    if abs(phi) < 1e-300:
        raise ParamSingularity("phi vanished in explicit double case")
    psi = ((2.0 - l1 * h) * e1 - l1 * phi) / 2.0
    theta = (h * e1 - phi) / (2.0 * l1 * phi ** 2)
    return _checked(SchemeParams(psi, phi, theta, h, SchemeKind.EXPLICIT), sc)


def _p1(x: float) -> float:
    """expm1(x)/x extended continuously through 0."""
    return 1.0 if x == 0.0 else math.expm1(x) / x


def eeds_with_zero(l2: float, l3: float, h: float) -> SchemeParams:
    """Explicit parameters for a spectrum {0, l2, l3} with l2, l3 nonzero
    and distinct. The zero eigenvalue pins psi = 1 exactly, leaving a
    2x2 system for phi and w = theta*phi^2."""
    sc = DistinctRealWithZero(l2, l3)
    gap = l2 - l3
    try:
        if abs(gap) < _DEN_MIN * max(1.0, abs(l2), abs(l3)):
            raise ParamSingularity("with-zero eigenvalue gap vanished")
        w = h * (_p1(l2 * h) - _p1(l3 * h)) / gap
        phi = h * _p1(l2 * h) - l2 * w
        if abs(phi) < 1e-300:
            raise ParamSingularity("phi vanished in explicit with-zero case")
        return _checked(
            SchemeParams(1.0, phi, w / (phi * phi), h, SchemeKind.EXPLICIT), sc
        )
    except ParamSingularity:
        return _checked(eeds_fallback(0.0, l2, l3, h), sc)


def eeds_triple(lam: float, h: float) -> SchemeParams:
    """Explicit parameters for a triple eigenvalue (pole at lam*h = 1)."""
    sc = TripleReal(lam)
    if abs(lam) <= _zero_tol(lam):
        return SchemeParams(1.0, h, 0.5, h, SchemeKind.EXPLICIT)
    if abs(1.0 - lam * h) < _DEN_MIN:
        raise ParamSingularity(f"triple-case pole: lambda*h = {lam * h!r}")
    e = math.exp(lam * h)
    phi = h * (1.0 - lam * h) * e
    if abs(phi) < 1e-300:
        raise ParamSingularity("phi vanished in explicit triple case")
    theta = h * h * e / (2.0 * phi ** 2)
    psi = e - lam * phi - 0.5 * h * h * e * lam ** 2
    return _checked(SchemeParams(psi, phi, theta, h, SchemeKind.EXPLICIT), sc)


def eeds_fallback(l1: complex, l2: complex, l3: complex, h: float) -> SchemeParams:
    """Linear-solve route for the explicit form: Vandermonde system in
    (psi, phi, w) with w = theta*phi^2 from psi + lam*phi + lam^2*w =
    e^(lam h)."""
    lams = np.array([l1, l2, l3], dtype=complex)
    es = np.exp(lams * h)
    m = np.column_stack([np.ones(3, dtype=complex), lams, lams ** 2])
    try:
        u = solve3(m, es)
    except SingularMatrix as exc:
        raise ParamSingularity(f"fallback system singular: {exc}") from exc
    imag_scale = float(np.max(np.abs(u.imag)))
    if imag_scale > 1e-8 * max(1.0, float(np.max(np.abs(u)))):
        raise ParamSingularity("fallback solution has a large imaginary part")
    psi, phi, w = (float(v) for v in u.real)
    if abs(phi) < 1e-300:
        raise ParamSingularity("fallback phi vanished")
    return SchemeParams(psi, phi, w / (phi * phi), h, SchemeKind.EXPLICIT)


# ----------------------------------------------------------------------
# Dispatch


def params_for(sc: SpectrumClass, h: float, kind: SchemeKind) -> SchemeParams:
    """Route a structural case to its parameter operation."""
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError(f"step size must be positive and finite, got {h!r}")
    if kind is SchemeKind.IMPLICIT:
        if isinstance(sc, DistinctReal):
            return ieds_distinct(sc.lambda1, sc.lambda2, sc.lambda3, h)
        if isinstance(sc, DistinctRealWithZero):
            return ieds_with_zero(sc.lambda2, sc.lambda3, h)
        if isinstance(sc, ComplexPairPlusReal):
            return ieds_complex(sc.alpha, sc.beta, sc.lam, h)
        if isinstance(sc, DoubleReal):
            return ieds_double(sc.repeated, sc.simple, h)
        if isinstance(sc, TripleReal):
            return ieds_triple(sc.value, h)
    else:
        if isinstance(sc, DistinctReal):
            return eeds_distinct(sc.lambda1, sc.lambda2, sc.lambda3, h)
        if isinstance(sc, DistinctRealWithZero):
            return eeds_with_zero(sc.lambda2, sc.lambda3, h)
        if isinstance(sc, ComplexPairPlusReal):
            return eeds_complex(sc.alpha, sc.beta, sc.lam, h)
        if isinstance(sc, DoubleReal):
            return eeds_double(sc.repeated, sc.simple, h)
        if isinstance(sc, TripleReal):
            return eeds_triple(sc.value, h)
    raise TypeError(f"unknown spectrum class {type(sc).__name__}")

"""One-step transfer matrices for the exact schemes, and integration
driven by them.

Implicit:  Q = (I - phi*theta*A)^-1 (psi*I + phi*(1-theta)*A)
Explicit:  Q = psi*I + phi*A + theta*phi^2*A^2

Every constructed transfer matrix is validated against the matrix
exponential; construction fails loudly rather than return an inexact Q.
Classification is tried at the requested clustering tolerance and, when
that rung's transfer is not exact to rounding level, once more at a
coarse tolerance, keeping whichever rung validates best: repeated
eigenvalues recovered from the characteristic cubic can split by far
more than the default tolerance, and a near-miss classification can
pass a loose one-step check while its defect still compounds over a
trajectory; only the merged formulas restore derivative-level agreement
for those spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ExactnessViolation,
    ParamSingularity,
    SingularImplicitStep,
    SingularMatrix,
)
from .linalg import as_matrix3, as_vec3, expm, inf_norm, solve3
from .params import SchemeKind, SchemeParams, params_for
from .spectrum import DEFAULT_CLUSTER_TOL, classify, eigenvalues3

EXACTNESS_TOL = 1e-9
COARSE_CLUSTER_TOL = 1e-4
# Accept a classification rung outright only when its transfer defect is
# at rounding level; anything above forces the coarse rung to compete.
_SNAP_TOL = 1e-12


@dataclass(frozen=True)
class TransferMatrix:
    """A one-step map x_{k+1} = q @ x_k at fixed step h.

    params is None for transfer matrices of classical baseline methods,
    which are not exact and skip the exactness validation.
    """

    q: np.ndarray
    h: float
    kind: SchemeKind
    params: SchemeParams | None


def _assemble(m: np.ndarray, p: SchemeParams) -> tuple[np.ndarray, float]:
    """Build Q for given parameters and measure its relative defect
    against e^(A h). Raises SingularImplicitStep if I - phi*theta*A is
    singular."""
    if p.kind is SchemeKind.IMPLICIT:
        lhs = np.eye(3) - p.phi * p.theta * m
        rhs = p.psi * np.eye(3) + p.phi * (1.0 - p.theta) * m
        try:
            cols = [solve3(lhs, rhs[:, j]) for j in range(3)]
        except SingularMatrix as exc:
            raise SingularImplicitStep(
                f"I - phi*theta*A is singular at h={p.h!r}"
            ) from exc
        q = np.column_stack(cols)
    else:
        q = p.psi * np.eye(3) + p.phi * m + p.theta * p.phi ** 2 * (m @ m)

    ref = expm(m, p.h)
    return q, inf_norm(q - ref) / max(1.0, inf_norm(ref))


def build_transfer(a, p: SchemeParams) -> TransferMatrix:
    """Assemble and validate the transfer matrix for given parameters.

    Raises SingularImplicitStep if I - phi*theta*A is singular, and
    ExactnessViolation if Q disagrees with e^(A h) beyond EXACTNESS_TOL
    (relative to max(1, ||e^(A h)||)); the latter indicates the spectrum
    was misclassified upstream.
    """
    m = as_matrix3(a)
    q, rel = _assemble(m, p)
    if not rel <= EXACTNESS_TOL:
        raise ExactnessViolation(
            f"transfer matrix error {rel:.3e} relative at h={p.h!r} "
            f"(limit {EXACTNESS_TOL:.0e})"
        )
    return TransferMatrix(q=q, h=p.h, kind=p.kind, params=p)


def transfer(a, h: float, kind: SchemeKind,
             cluster_tol: float | None = None) -> TransferMatrix:
    """Classify the spectrum of A and build the validated transfer matrix.

    cluster_tol is the relative eigenvalue clustering tolerance (default
    DEFAULT_CLUSTER_TOL). A rung whose transfer is exact to rounding
    level is returned at once; otherwise classification is retried at
    COARSE_CLUSTER_TOL and the rung with the smaller defect wins,
    provided it is within EXACTNESS_TOL.
    """
    m = as_matrix3(a)
    s = eigenvalues3(m)
    base_tol = DEFAULT_CLUSTER_TOL if cluster_tol is None else cluster_tol
    errors: list[Exception] = []
    seen = []
    best: tuple[float, TransferMatrix] | None = None
    for tol in (base_tol, COARSE_CLUSTER_TOL):
        sc = classify(s, tol)
        if sc in seen:
            continue
        seen.append(sc)
        try:
            p = params_for(sc, h, kind)
            q, rel = _assemble(m, p)
        except (ParamSingularity, SingularImplicitStep) as exc:
            errors.append(exc)
            continue
        tm = TransferMatrix(q=q, h=p.h, kind=p.kind, params=p)
        if rel <= _SNAP_TOL:
            return tm
        if best is None or rel < best[0]:
            best = (rel, tm)
    if best is not None:
        if best[0] <= EXACTNESS_TOL:
            return best[1]
        raise ExactnessViolation(
            f"transfer matrix error {best[0]:.3e} relative at h={h!r} "
            f"(limit {EXACTNESS_TOL:.0e})"
        )
    raise errors[-1]


def step(q: TransferMatrix, x) -> np.ndarray:
    """Advance one step: q @ x."""
    return q.q @ as_vec3(x)


@dataclass(frozen=True)
class Trajectory:
    """Grid times t_k = k*h and the states x_k, k = 0..N."""

    times: np.ndarray
    states: np.ndarray

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]


def integrate(a, x0, t_final: float, n_steps: int, kind: SchemeKind,
              cluster_tol: float | None = None) -> Trajectory:
    """Integrate x' = A x from x(0) = x0 to t_final in n_steps uniform
    steps with the exact scheme of the given kind.

    Raises OverflowError if a state becomes non-finite.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    h = t_final / n_steps
    q = transfer(a, h, kind, cluster_tol)
    x = as_vec3(x0)
    states = np.empty((n_steps + 1, 3))
    states[0] = x
    for k in range(1, n_steps + 1):
        x = q.q @ x
        if not np.all(np.isfinite(x)):
            raise OverflowError(f"state became non-finite at step {k}")
        states[k] = x
    times = np.arange(n_steps + 1) * h
    return Trajectory(times=times, states=states)


def one_shot(a, x0, t: float, kind: SchemeKind,
             cluster_tol: float | None = None) -> np.ndarray:
    """x(t) in a single step of size h = t; exactness is independent of
    the step size, so one step suffices at any horizon."""
    q = transfer(a, t, kind, cluster_tol)
    return q.q @ as_vec3(x0)

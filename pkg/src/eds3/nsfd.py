"""Nonstandard finite-difference extension to quasi-linear systems
v' = A v + g(t, v): the linear part advances through the exact explicit
transfer matrix and the perturbation enters through the denominator
function phi, so the update is

    v_{k+1} = Q v_k + phi * g(t_k, v_k).

First-order accurate in h, but inherits the exact scheme's qualitative
behavior (boundedness, decay) at any step size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg import as_matrix3, as_vec3
from .params import SchemeKind
from .scheme import Trajectory, TransferMatrix, transfer


@dataclass(frozen=True)
class QuasiLinearProblem:
    """v' = A v + g(t, v) on [0, T] from v(0) = v0."""

    A: np.ndarray
    g: Callable[[float, np.ndarray], np.ndarray]
    v0: np.ndarray
    T: float


def nsfd_step(p: QuasiLinearProblem, q: TransferMatrix, v, t: float) -> np.ndarray:
    """One update from (t, v); q must be an explicit exact transfer."""
    if q.params is None or q.kind is not SchemeKind.EXPLICIT:
        raise ValueError("nsfd_step needs an explicit exact-scheme transfer matrix")
    return q.q @ as_vec3(v) + q.params.phi * np.asarray(p.g(t, np.asarray(v)), dtype=float)


def nsfd_integrate(p: QuasiLinearProblem, n_steps: int,
                   cluster_tol: float | None = None) -> Trajectory:
    """Integrate the quasi-linear problem over [0, T] in n_steps steps.

    Raises OverflowError if a state becomes non-finite.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    h = p.T / n_steps
    q = transfer(as_matrix3(p.A), h, SchemeKind.EXPLICIT, cluster_tol)
    v = as_vec3(p.v0)
    states = np.empty((n_steps + 1, 3))
    states[0] = v
    for k in range(n_steps):
        v = nsfd_step(p, q, v, k * h)
        if not np.all(np.isfinite(v)):
            raise OverflowError(f"state became non-finite at step {k + 1}")
        states[k + 1] = v
    return Trajectory(times=np.arange(n_steps + 1) * h, states=states)


def rk4_reference(p: QuasiLinearProblem, t_final: float, n_steps: int) -> np.ndarray:
    """Tiny-step classical RK4 on the full right-hand side; serves as the
    accuracy oracle for the first-order scheme above."""
    a = as_matrix3(p.A)

    def f(t: float, v: np.ndarray) -> np.ndarray:
        return a @ v + np.asarray(p.g(t, v), dtype=float)

    h = t_final / n_steps
    v = as_vec3(p.v0)
    t = 0.0
    for _ in range(n_steps):
        k1 = f(t, v)
        k2 = f(t + h / 2.0, v + (h / 2.0) * k1)
        k3 = f(t + h / 2.0, v + (h / 2.0) * k2)
        k4 = f(t + h, v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += h
    return v

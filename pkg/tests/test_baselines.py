"""Classical integrator transfer maps.

The diagonal anchors are exact rationals worked out by hand:
  R_rk4(-10)    = sum_{j<=4} (-10)^j/j!           = 291
  R_taylor(-10) = sum_{j<=6} (-10)^j/j!           = 7619/9
  R_radau(-10)  = (1+2z/5+z^2/20)/(1-3z/5+3z^2/20-z^3/60) at z=-10 = 3/58
"""

import numpy as np
import pytest

from eds3.baselines import MethodId, baseline_transfer, radau_transfer_matrix
from eds3.linalg import expm
from eds3.params import SchemeKind
from eds3.problems import example1
from eds3.scheme import transfer

ALL_METHODS = list(MethodId)


@pytest.mark.parametrize("method", ALL_METHODS, ids=lambda m: m.value)
def test_zero_matrix_gives_identity(method):
    q = baseline_transfer(np.zeros((3, 3)), 0.7, method)
    np.testing.assert_allclose(q.q, np.eye(3), atol=1e-15)


def test_rk4_diagonal_anchor():
    q = baseline_transfer(np.diag([-1.0, -2.0, -100.0]), 0.1, MethodId.RK4)
    assert q.q[2, 2] == pytest.approx(291.0, abs=1e-9)


def test_taylor_diagonal_anchor():
    q = baseline_transfer(np.diag([-1.0, -2.0, -100.0]), 0.1, MethodId.TAYLOR5)
    assert q.q[2, 2] == pytest.approx(7619.0 / 9.0, rel=1e-12)


def test_radau_diagonal_anchor():
    q = baseline_transfer(np.diag([-1.0, -2.0, -100.0]), 0.1, MethodId.RADAU_IIA5)
    assert q.q[2, 2] == pytest.approx(3.0 / 58.0, rel=1e-10)


def test_radau_matches_rational_function():
    def r(z):
        num = 1.0 + 2.0 * z / 5.0 + z * z / 20.0
        den = 1.0 - 3.0 * z / 5.0 + 3.0 * z * z / 20.0 - z ** 3 / 60.0
        return num / den

    m = np.diag([-0.5, -4.0, -40.0])
    q = radau_transfer_matrix(m, 0.25)
    for i, mu in enumerate(np.diag(m)):
        assert q[i, i] == pytest.approx(r(0.25 * mu), rel=1e-12)


def test_exact_ids_delegate_to_scheme():
    a = example1().A
    for mid, kind in ((MethodId.IEDS, SchemeKind.IMPLICIT),
                      (MethodId.EEDS, SchemeKind.EXPLICIT)):
        via_baseline = baseline_transfer(a, 0.4, mid)
        direct = transfer(a, 0.4, kind)
        np.testing.assert_array_equal(via_baseline.q, direct.q)
        assert via_baseline.params is not None


def test_classical_maps_do_not_carry_params():
    q = baseline_transfer(example1().A, 0.4, MethodId.RK4)
    assert q.params is None


def test_rotation_step_moduli():
    # One step on the pure rotation block: explicit Euler inflates the
    # radius by sqrt(1+h^2), implicit Euler deflates it by the inverse,
    # and the trapezoidal map preserves it to rounding.
    a = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
    h = 0.3
    x = np.array([1.0, 0.0, 0.0])
    r = {}
    for m in (MethodId.EXPLICIT_EULER, MethodId.IMPLICIT_EULER, MethodId.TRAPEZOIDAL):
        y = baseline_transfer(a, h, m).q @ x
        r[m] = np.hypot(y[0], y[1])
    assert r[MethodId.EXPLICIT_EULER] == pytest.approx(np.sqrt(1 + h * h), rel=1e-14)
    assert r[MethodId.IMPLICIT_EULER] == pytest.approx(1 / np.sqrt(1 + h * h), rel=1e-14)
    assert r[MethodId.TRAPEZOIDAL] == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("method,order", [
    (MethodId.EXPLICIT_EULER, 1),
    (MethodId.IMPLICIT_EULER, 1),
    (MethodId.TRAPEZOIDAL, 2),
    (MethodId.RK4, 4),
    (MethodId.RADAU_IIA5, 5),
    (MethodId.TAYLOR5, 6),
], ids=lambda v: getattr(v, "value", v))
def test_convergence_order(method, order):
    """Endpoint error on example1 over [0, 1] decays at the classical
    order (Taylor's six retained terms give slope ~6)."""
    prob = example1()
    ref = expm(prob.A, 1.0) @ prob.x0
    ns = (8, 16, 32, 64) if order < 5 else (2, 4, 8, 16)
    errs = []
    for n in ns:
        h = 1.0 / n
        q = baseline_transfer(prob.A, h, method)
        x = prob.x0.copy()
        for _ in range(n):
            x = q.q @ x
        errs.append(np.abs(x - ref).max())
    slopes = [np.log2(errs[i] / errs[i + 1]) for i in range(len(errs) - 1)]
    assert np.median(slopes) == pytest.approx(order, abs=0.4)


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        baseline_transfer(np.eye(3), 0.1, "rk4")

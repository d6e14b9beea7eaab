import numpy as np
import pytest
import scipy.linalg

from eds3.errors import SingularMatrix
from eds3.linalg import as_matrix3, as_vec3, expm, inf_norm, solve3


def test_as_matrix3_accepts_lists_and_arrays():
    m = as_matrix3([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.shape == (3, 3)
    assert m.dtype == np.float64
    np.testing.assert_array_equal(as_matrix3(m), m)


def test_as_matrix3_rejects_wrong_shape():
    with pytest.raises(ValueError):
        as_matrix3([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        as_vec3([1, 2])


def test_inf_norm_matches_numpy():
    rng = np.random.default_rng(1)
    for _ in range(20):
        m = rng.standard_normal((3, 3))
        assert inf_norm(m) == pytest.approx(np.linalg.norm(m, np.inf), rel=0, abs=0)


def test_solve3_matches_numpy_solve():
    rng = np.random.default_rng(2)
    for _ in range(200):
        m = rng.standard_normal((3, 3))
        b = rng.standard_normal(3)
        x = solve3(m, b)
        np.testing.assert_allclose(x, np.linalg.solve(m, b), rtol=1e-10, atol=1e-12)


def test_solve3_complex():
    m = np.array([[1 + 1j, 0, 0], [0, 2j, 0], [1, 1, 3]], dtype=complex)
    b = np.array([2 + 2j, 4j, 6], dtype=complex)
    x = solve3(m, b)
    np.testing.assert_allclose(m @ x, b, atol=1e-14)


def test_solve3_singular_raises():
    m = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]])
    with pytest.raises(SingularMatrix):
        solve3(m, np.ones(3))


def test_expm_identity_and_zero():
    np.testing.assert_array_equal(expm(np.zeros((3, 3))), np.eye(3))
    # t = 0 must give the identity regardless of A
    a = np.array([[1.0, 2.0, 0.0], [0.0, -1.0, 1.0], [3.0, 0.0, 2.0]])
    np.testing.assert_allclose(expm(a, 0.0), np.eye(3), atol=1e-16)


def test_expm_against_scipy_random():
    """Scaling-and-squaring against the scipy oracle on dense draws."""
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(200):
        a = rng.uniform(-2, 2, size=(3, 3))
        t = float(rng.uniform(0.01, 3.0))
        ours = expm(a, t)
        ref = scipy.linalg.expm(a * t)
        scale = max(1.0, float(np.abs(ref).max()))
        worst = max(worst, float(np.abs(ours - ref).max()) / scale)
    assert worst < 1e-11


def test_expm_stiff_diagonal():
    a = np.diag([-1.0, -2.0, -100.0])
    got = expm(a, 1.0)
    np.testing.assert_allclose(np.diag(got), np.exp(np.diag(a)), rtol=1e-12)
    off = got - np.diag(np.diag(got))
    assert np.abs(off).max() == 0.0


def test_expm_group_property():
    a = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.5]])
    lhs = expm(a, 0.7) @ expm(a, 0.3)
    np.testing.assert_allclose(lhs, expm(a, 1.0), rtol=1e-13, atol=1e-15)

"""Eigenvalue extraction and structural classification.

The classification accounting for Jordan-shaped draws follows the blunt
reality of floating point: a defective repeated root is recovered from
the characteristic cubic with ~eps^(1/3) error, so at the default
clustering tolerance those draws may legitimately classify as split;
they must still land within a coarse neighborhood of the truth and never
confuse well-separated spectra.
"""

import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eds3.errors import AmbiguousSpectrumWarning
from eds3.problems import example1
from eds3.spectrum import (
    ComplexPairPlusReal,
    DistinctReal,
    DistinctRealWithZero,
    DoubleReal,
    Spectrum,
    TripleReal,
    char_poly,
    classify,
    eigenvalues3,
)
from eds3.verify import JORDAN_SHAPES, jordan_matrix


def test_char_poly_known_matrix():
    # example1's matrix has spectrum {-1, +/-i}, so the characteristic
    # polynomial is (x+1)(x^2+1) = x^3 + x^2 + x + 1.
    c2, c1, c0 = char_poly(example1().A)
    np.testing.assert_allclose([c2, c1, c0], [1.0, 1.0, 1.0], atol=1e-12)


def test_eigenvalues_diagonal_exact():
    s = eigenvalues3(np.diag([2.0, -3.0, 5.0]))
    np.testing.assert_allclose(
        [s.lambda1, s.lambda2, s.lambda3], [-3.0, 2.0, 5.0], atol=1e-13
    )
    assert all(v.imag == 0.0 for v in s.values)


def test_eigenvalues_sorted_deterministically():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = rng.uniform(-2, 2, size=(3, 3))
        vals = eigenvalues3(a).values
        keys = [(v.real, v.imag) for v in vals]
        assert keys == sorted(keys)


def test_complex_pair_is_exactly_conjugate():
    a = np.array([[0.3, -2.0, 0.0], [2.0, 0.3, 0.0], [0.0, 0.0, -1.0]])
    s = eigenvalues3(a)
    pair = [v for v in s.values if v.imag != 0.0]
    assert len(pair) == 2
    assert pair[0] == pair[1].conjugate()


def test_eigenvalues_match_numpy():
    rng = np.random.default_rng(12)
    for _ in range(100):
        a = rng.uniform(-2, 2, size=(3, 3))
        ours = sorted(eigenvalues3(a).values, key=lambda z: (z.real, z.imag))
        ref = sorted(np.linalg.eigvals(a), key=lambda z: (z.real, z.imag))
        for x, y in zip(ours, ref):
            assert abs(x - complex(y)) < 1e-8 * max(1.0, abs(y))


def test_classify_distinct():
    s = Spectrum(-3.0, 1.0, 5.0, cluster_tol=1e-7)
    sc = classify(s)
    assert sc == DistinctReal(-3.0, 1.0, 5.0)


def test_classify_merges_close_pair():
    s = Spectrum(1.0, 1.0 + 1e-12, 7.0, cluster_tol=1e-7)
    sc = classify(s)
    assert isinstance(sc, DoubleReal)
    assert sc.repeated == pytest.approx(1.0, abs=1e-12)
    assert sc.simple == 7.0


def test_classify_triple_merge():
    s = Spectrum(2.0 - 1e-9, 2.0, 2.0 + 1e-9, cluster_tol=1e-7)
    sc = classify(s)
    assert isinstance(sc, TripleReal)
    assert sc.value == pytest.approx(2.0, abs=1e-12)


def test_classify_with_zero():
    s = Spectrum(-2.0, 1e-12, 3.0, cluster_tol=1e-7)
    sc = classify(s)
    assert sc == DistinctRealWithZero(3.0, -2.0) or sc == DistinctRealWithZero(-2.0, 3.0)


def test_classify_complex():
    a = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
    sc = classify(eigenvalues3(a))
    assert isinstance(sc, ComplexPairPlusReal)
    assert sc.alpha == pytest.approx(0.0, abs=1e-12)
    assert sc.beta == pytest.approx(1.0, abs=1e-12)
    assert sc.lam == pytest.approx(-1.0, abs=1e-12)


def test_two_near_zero_values_warn_and_merge():
    # Distinct values that both sit inside the zero band must not be
    # snapped to zero separately; they merge with a warning.
    s = Spectrum(-9e-9, 9e-9, 1.0, cluster_tol=1e-8)
    with pytest.warns(AmbiguousSpectrumWarning):
        sc = classify(s)
    assert isinstance(sc, DoubleReal)
    assert sc.repeated == pytest.approx(0.0, abs=1e-8)
    assert sc.simple == 1.0


_EXPECTED_CLASS = {
    "distinct": DistinctReal,
    "distinct_zero": DistinctRealWithZero,
    "complex_pair": ComplexPairPlusReal,
    "double_semisimple": DoubleReal,
    "double_defective": DoubleReal,
    "triple_defective": TripleReal,
}
_DEFECTIVE = {"double_defective", "triple_defective"}


def _true_multiset(shape, a):
    return sorted(np.linalg.eigvals(a), key=lambda z: (z.real, z.imag))


def test_jordan_shape_classification_accounting():
    """1000 structured draws: non-defective shapes classify exactly
    >= 99% of the time; every draw is exact or a near-tie (recovered
    multiset within 1e-3 of truth); no cross-class confusion for
    spectra with min gap > 1e-3."""
    rng = np.random.default_rng(2718)
    per_shape_hits = {s: 0 for s in JORDAN_SHAPES}
    per_shape_runs = {s: 0 for s in JORDAN_SHAPES}
    for i in range(1000):
        shape = JORDAN_SHAPES[i % len(JORDAN_SHAPES)]
        a = jordan_matrix(rng, shape)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", AmbiguousSpectrumWarning)
            s = eigenvalues3(a)
            sc = classify(s)
        per_shape_runs[shape] += 1
        if isinstance(sc, _EXPECTED_CLASS[shape]):
            per_shape_hits[shape] += 1
        else:
            # near-tie accounting: the recovered values must still sit on
            # top of the true multiset
            ref = _true_multiset(shape, a)
            got = sorted(s.values, key=lambda z: (z.real, z.imag))
            worst = max(abs(x - complex(y)) for x, y in zip(got, ref))
            assert worst < 1e-3, f"{shape}: classified {sc} with drift {worst:.2e}"
            # and a genuinely separated spectrum must never be re-shaped
            gaps = [abs(ref[i] - ref[j]) for i in range(3) for j in range(i + 1, 3)]
            assert min(gaps) <= 1e-3, f"{shape}: cross-class at gap {min(gaps):.2e}"
    for shape in JORDAN_SHAPES:
        if shape in _DEFECTIVE:
            continue
        rate = per_shape_hits[shape] / per_shape_runs[shape]
        assert rate >= 0.99, f"{shape}: exact-class rate {rate:.3f}"


@given(
    st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5),
)
@settings(max_examples=300, deadline=None)
def test_classify_total_on_separated_reals(a, b, c):
    vals = sorted([a, b, c])
    gaps = [vals[1] - vals[0], vals[2] - vals[1]] + [abs(v) for v in vals]
    if min(gaps) < 1e-3:
        return
    sc = classify(Spectrum(*vals, cluster_tol=1e-7))
    assert sc == DistinctReal(*vals)

"""Boundary holonomies: generator matrices, closed forms, words."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pantsflow.coords import FGCoords, casimirs
from pantsflow.dual import Dual, value_of
from pantsflow.holonomy import (Word, eigenvalue_ratio_report, holonomy_word,
                                matrix_E, matrix_T, peripheral_holonomies,
                                peripheral_products,
                                predicted_eigenvalue_ratios)
from pantsflow.proj_linalg import (IDENTITY3, det3, mat_inv, mat_mul,
                                   projective_distance)

positive = st.floats(min_value=0.1, max_value=10.0)
coords_strategy = st.tuples(*([positive] * 8)).map(
    lambda v: FGCoords(v[:6], v[6:]))


def test_generators_require_positive_arguments():
    with pytest.raises(ValueError):
        matrix_T(0.0)
    with pytest.raises(ValueError):
        matrix_T(-1.0)
    with pytest.raises(ValueError):
        matrix_E(1.0, -2.0)


@given(positive)
@settings(deadline=None)
def test_matrix_T_unit_det(x):
    assert abs(det3(matrix_T(x)) - 1.0) < 1e-12


@given(positive, positive)
@settings(deadline=None)
def test_matrix_E_unit_det(z, w):
    assert abs(det3(matrix_E(z, w)) - 1.0) < 1e-12


def test_first_peripheral_at_ones():
    a, b, c = peripheral_holonomies(FGCoords((1,) * 6, (1, 1)))
    assert a == ((1.0, 4.0, 4.0), (0.0, 1.0, 2.0), (0.0, 0.0, 1.0))


def test_triangular_shape_is_exact():
    c = FGCoords((0.3, 1.7, 2.5, 0.9, 4.1, 1.2), (0.6, 3.3))
    a, _, cm = peripheral_holonomies(c)
    assert a[1][0] == 0.0 and a[2][0] == 0.0 and a[2][1] == 0.0
    assert cm[0][1] == 0.0 and cm[0][2] == 0.0 and cm[1][2] == 0.0


@given(coords_strategy)
@settings(deadline=None)
def test_closed_forms_match_generator_products(c):
    closed = peripheral_holonomies(c)
    product = peripheral_products(c)
    for m, n in zip(closed, product):
        for i in range(3):
            for j in range(3):
                scale = 1.0 + abs(n[i][j])
                assert abs(m[i][j] - n[i][j]) <= 1e-9 * scale


@given(coords_strategy)
@settings(deadline=None)
def test_group_relation(c):
    a, b, cm = peripheral_holonomies(c)
    assert projective_distance(mat_mul(mat_mul(a, b), cm), IDENTITY3) < 1e-9


@given(coords_strategy)
@settings(deadline=None)
def test_unit_determinants(c):
    for m in peripheral_holonomies(c):
        assert abs(det3(m) - 1.0) < 1e-10


def test_word_parse_and_algebra():
    w = Word.parse("a b^2 c^-1")
    assert w.tokens == (("a", 1), ("b", 2), ("c", -1))
    assert str(w) == "a b^2 c^-1"
    assert str(w.inverse()) == "c b^-2 a^-1"
    assert str(w * Word.parse("b")) == "a b^2 c^-1 b"


def test_word_rejects_garbage():
    with pytest.raises(ValueError):
        Word.parse("a d")
    with pytest.raises(ValueError):
        Word.parse("a^x")
    with pytest.raises(ValueError):
        Word([("d", 1)])
    with pytest.raises(ValueError):
        Word([("a", 0)])
    # empty text is the identity word, not an error
    assert Word.parse("").tokens == ()


def test_holonomy_word_generators():
    c = FGCoords((0.5, 2.0, 1.5, 0.8, 1.2, 3.0), (0.7, 1.9))
    a, b, cm = peripheral_holonomies(c)
    assert holonomy_word(c, Word.parse("a")) == a
    got = holonomy_word(c, Word.parse("b^-1"))
    want = mat_inv(b)
    assert max(abs(got[i][j] - want[i][j])
               for i in range(3) for j in range(3)) < 1e-12


def test_holonomy_word_inverse_is_matrix_inverse():
    c = FGCoords((0.5, 2.0, 1.5, 0.8, 1.2, 3.0), (0.7, 1.9))
    w = Word.parse("a c^-1 b^2")
    m = holonomy_word(c, w)
    n = holonomy_word(c, w.inverse())
    # entries near 1e3 cancel down to the identity, so expect ~1e3 ulps
    assert projective_distance(mat_mul(m, n), IDENTITY3) < 1e-8


def test_predicted_ratios_are_casimir_pairs():
    c = FGCoords((1, 2, 3, 4, 5, 6), (7, 8))
    la1, la2, lb1, lb2, lg1, lg2 = casimirs(c)
    pred = predicted_eigenvalue_ratios(c)
    assert pred["a"] == (la1, la2)
    assert pred["b"] == (lb1, lb2)
    assert pred["c"] == (lg1, lg2)


@given(coords_strategy)
@settings(deadline=None, max_examples=60)
def test_eigenvalue_ratio_report_accepts_random_coords(c):
    # round coordinate choices can make eigenvalues collide exactly, and
    # a clustered pair is only sqrt(eps) accurate, so the bound is loose
    report = eigenvalue_ratio_report(c, tol=1e-5)
    assert report["ok"]
    for g in ("a", "b", "c"):
        assert max(report[g]["errors"]) <= 1e-5


def test_matrix_T_supports_dual_numbers():
    x = 1.7
    m = matrix_T(Dual(x, 1.0))
    h = 1e-7
    plus = matrix_T(x + h)
    minus = matrix_T(x - h)
    for i in range(3):
        for j in range(3):
            fd = (plus[i][j] - minus[i][j]) / (2.0 * h)
            deriv = m[i][j].b if isinstance(m[i][j], Dual) else 0.0
            assert abs(deriv - fd) < 1e-6
            assert abs(value_of(m[i][j]) - matrix_T(x)[i][j]) < 1e-15

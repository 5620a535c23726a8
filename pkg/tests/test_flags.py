"""Projective flags and their cross / triple ratio invariants."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pantsflow.flags import (Flag, ProjLine, ProjPoint, apply_matrix_flag,
                             cr1, cr2, cross_ratio_concurrent, join,
                             standard_quadruple, triple_ratio)
from pantsflow.proj_linalg import det3, mat_inv, normalize_sl3

positive = st.floats(min_value=0.1, max_value=5.0)
entries = st.floats(min_value=-3.0, max_value=3.0)


@st.composite
def unimodular(draw):
    m = tuple(tuple(draw(entries) for _ in range(3)) for _ in range(3))
    assume(abs(det3(m)) > 1e-2)
    return normalize_sl3(m)


def test_flag_requires_incidence():
    with pytest.raises(ValueError):
        Flag((1.0, 0.0, 0.0), (1.0, 0.0, 0.0))
    # the y-axis point on the line x = 0 is fine
    Flag((0.0, 1.0, 0.0), (1.0, 0.0, 0.0))


def test_join_contains_both_points():
    p = ProjPoint((1.0, 2.0, 3.0))
    q = ProjPoint((-1.0, 0.5, 2.0))
    l = join(p, q)
    assert abs(l(p)) < 1e-12
    assert abs(l(q)) < 1e-12


def test_cross_ratio_pencil_values():
    # pencil through the origin, lines labeled by slope
    p = ProjPoint((0.0, 0.0, 1.0))
    horizontal = ProjLine((0.0, 1.0, 0.0))
    vertical = ProjLine((1.0, 0.0, 0.0))
    diagonal = ProjLine((1.0, -1.0, 0.0))
    antidiagonal = ProjLine((1.0, 1.0, 0.0))
    slope3 = ProjLine((3.0, -1.0, 0.0))
    # slopes (inf, -1, 0, x) map to x
    r = cross_ratio_concurrent(vertical, antidiagonal, horizontal, slope3, p)
    assert abs(r - 3.0) < 1e-12
    # the harmonic quadruple in this ordering comes out as -2
    r = cross_ratio_concurrent(horizontal, vertical, diagonal, antidiagonal, p)
    assert abs(r - (-2.0)) < 1e-12


@given(positive, positive, positive, positive)
@settings(deadline=None)
def test_standard_quadruple_first_ratio(x, y, z, w):
    f1, f2, f3, f4 = standard_quadruple(x, y, z, w)
    assert abs(cr1(f1, f2, f3, f4) - (-y / (y + z))) < 1e-9 * (1.0 + y / (y + z))


@given(positive, positive, positive, positive)
@settings(deadline=None)
def test_standard_quadruple_second_ratio(x, y, z, w):
    f1, f2, f3, f4 = standard_quadruple(x, y, z, w)
    expected = -(1.0 + x * y) / (x * y)
    assert abs(cr2(f1, f2, f3, f4) - expected) < 1e-9 * (1.0 + abs(expected))


@given(positive, positive, positive, positive)
@settings(deadline=None)
def test_standard_quadruple_triple_ratio(x, y, z, w):
    f1, f2, f3, _ = standard_quadruple(x, y, z, w)
    assert abs(triple_ratio(f1, f2, f3) - 1.0 / x) < 1e-9 * (1.0 + 1.0 / x)


@given(positive, positive, positive, positive, unimodular())
@settings(deadline=None, max_examples=60)
def test_invariance_under_projective_maps(x, y, z, w, m):
    flags = standard_quadruple(x, y, z, w)
    m_inv = mat_inv(m)
    moved = [apply_matrix_flag(m, m_inv, f) for f in flags]
    a1 = cr1(*flags)
    a2 = cr2(*flags)
    a3 = triple_ratio(*flags[:3])
    b1 = cr1(*moved)
    b2 = cr2(*moved)
    b3 = triple_ratio(*moved[:3])
    assert abs(a1 - b1) <= 1e-8 * (1.0 + abs(a1))
    assert abs(a2 - b2) <= 1e-8 * (1.0 + abs(a2))
    assert abs(a3 - b3) <= 1e-8 * (1.0 + abs(a3))


def test_triple_ratio_frozen_value():
    # independent hand computation for x = 2:
    # with the standard flags the triple ratio comes out as 1/x
    f1, f2, f3, _ = standard_quadruple(2.0, 1.0, 1.0, 1.0)
    assert abs(triple_ratio(f1, f2, f3) - 0.5) < 1e-12

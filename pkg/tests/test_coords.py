"""Coordinate containers, Casimir invariants, and chart embeddings."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pantsflow.coords import (FGCoords, LeafPoint, LengthVector, casimirs,
                              chart_point, fuchsian_leaf, fuchsian_point,
                              leaf_embed, unipotent_leaf)
from pantsflow.poisson import eruption_flow, hexagon_flow

positive = st.floats(min_value=0.05, max_value=20.0)
coords_strategy = st.tuples(*([positive] * 8)).map(
    lambda v: FGCoords(v[:6], v[6:]))


def test_validation_rejects_nonpositive():
    with pytest.raises(ValueError):
        FGCoords((1, 1, 1, 1, 1, -1), (1, 1))
    with pytest.raises(ValueError):
        FGCoords((1, 1, 1, 1, 1, 1), (0.0, 1))
    with pytest.raises(ValueError):
        LengthVector((1, 1, 1, 1, 1, 0))
    with pytest.raises(ValueError):
        LeafPoint(unipotent_leaf(), -2.0, 1.0)


def test_validation_rejects_wrong_arity():
    with pytest.raises(ValueError):
        FGCoords((1, 1, 1), (1, 1))
    with pytest.raises(ValueError):
        FGCoords((1,) * 6, (1,))
    with pytest.raises(ValueError):
        LengthVector((1, 1))


def test_as_tuple_order():
    c = FGCoords((1, 2, 3, 4, 5, 6), (7, 8))
    assert c.as_tuple() == (1, 2, 3, 4, 5, 6, 7, 8)


def test_json_roundtrip_exact():
    c = FGCoords((0.1, 2.0, 1.0 / 3.0, 4.0, 5.0, 6.0), (7.0, math.pi))
    back = FGCoords.from_json(c.to_json())
    assert back.as_tuple() == c.as_tuple()
    p = LeafPoint(fuchsian_leaf(3.0, 6.0, 8.0), 2.0, 1.0 / 7.0)
    q = LeafPoint.from_json(p.to_json())
    assert tuple(q.leaf) == tuple(p.leaf)
    assert (q.sigma1, q.tau1) == (p.sigma1, p.tau1)


def test_casimirs_formulas():
    c = FGCoords((1.0, 2.0, 3.0, 4.0, 5.0, 6.0), (7.0, 8.0))
    la1, la2, lb1, lb2, lg1, lg2 = casimirs(c)
    assert la1 == 1.0 * 4.0
    assert la2 == 7.0 * 8.0 / (2.0 * 3.0)
    assert lb1 == 3.0 * 6.0
    assert lb2 == 7.0 * 8.0 / (4.0 * 5.0)
    assert lg1 == 2.0 * 5.0
    assert lg2 == 7.0 * 8.0 / (1.0 * 6.0)


def test_fuchsian_point_lands_on_fuchsian_leaf():
    c = fuchsian_point(3.0, 6.0, 8.0)
    assert c.tau == (1.0, 1.0)
    got = casimirs(c)
    want = tuple(fuchsian_leaf(3.0, 6.0, 8.0))
    assert max(abs(g - w) for g, w in zip(got, want)) < 1e-12


def test_fuchsian_point_chart():
    c = fuchsian_point(3.0, 6.0, 8.0)
    assert abs(c.sigma[0] - math.sqrt(3.0 * 8.0 / 6.0)) < 1e-15
    assert abs(c.sigma[0] - 2.0) < 1e-15


def test_unipotent_leaf_all_ones():
    assert tuple(unipotent_leaf()) == (1.0,) * 6


@given(st.tuples(*([positive] * 6)), positive, positive)
@settings(deadline=None)
def test_leaf_embed_inverts_casimirs(leaf_values, s1, t1):
    leaf = LengthVector(leaf_values)
    c = leaf_embed(LeafPoint(leaf, s1, t1))
    got = casimirs(c)
    for g, w in zip(got, leaf):
        assert abs(g - w) <= 1e-10 * (1.0 + abs(w))
    assert c.sigma[0] == s1
    assert c.tau[0] == t1


@given(coords_strategy)
@settings(deadline=None)
def test_chart_point_projection(c):
    p = chart_point(c)
    assert p.sigma1 == c.sigma[0]
    assert p.tau1 == c.tau[0]
    got = casimirs(c)
    for g, w in zip(got, p.leaf):
        assert g == w


@given(coords_strategy, st.floats(min_value=-2.0, max_value=2.0))
@settings(deadline=None)
def test_flows_preserve_casimirs(c, t):
    base = casimirs(c)
    for flowed in (eruption_flow(c, t), hexagon_flow(c, t)):
        moved = casimirs(flowed)
        for g, w in zip(moved, base):
            assert abs(g - w) <= 1e-10 * (1.0 + abs(w))


def test_leaf_embed_at_ones_is_all_ones():
    p = LeafPoint(unipotent_leaf(), 1.0, 1.0)
    c = leaf_embed(p)
    assert max(abs(v - 1.0) for v in c.as_tuple()) < 1e-14

"""Bracket structure, Hamiltonians, and the scaling flows."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pantsflow.coords import FGCoords, LeafPoint, fuchsian_leaf, unipotent_leaf
from pantsflow.poisson import (EPSILON, HAM_E, HAM_I, LogLinearFunction,
                               bracket_coordinates, bracket_log_linear,
                               casimir_log_functions, coordinate_flow,
                               eruption_flow, hamiltonian_vf_leaf,
                               hexagon_flow, mixed_flow, symplectic_form_leaf)
from pantsflow.traces import CurveId, trace_function

positive = st.floats(min_value=0.1, max_value=10.0)
coords_strategy = st.tuples(*([positive] * 8)).map(
    lambda v: FGCoords(v[:6], v[6:]))
times = st.floats(min_value=-2.0, max_value=2.0)


def test_epsilon_shape_and_antisymmetry():
    assert len(EPSILON) == 8
    for row in EPSILON:
        assert len(row) == 8
    for i in range(8):
        for j in range(8):
            assert EPSILON[i][j] == -EPSILON[j][i]


def test_epsilon_frozen_entries():
    # edge rows pair only with the triangle coordinates, alternating sign
    assert EPSILON[0] == (0, 0, 0, 0, 0, 0, 1, -1)
    assert EPSILON[1] == (0, 0, 0, 0, 0, 0, -1, 1)
    assert EPSILON[6] == (-1, 1, -1, 1, -1, 1, 0, 0)
    assert EPSILON[7] == (1, -1, 1, -1, 1, -1, 0, 0)
    assert EPSILON[6][7] == 0


def test_coordinate_bracket_values():
    c = FGCoords((1.0, 2.0, 3.0, 4.0, 5.0, 6.0), (7.0, 8.0))
    # {x_i, x_j} = 2 eps_ij x_i x_j, indices one-based
    assert bracket_coordinates(1, 7, c) == 2.0 * 1.0 * 7.0
    assert bracket_coordinates(7, 1, c) == -2.0 * 1.0 * 7.0
    assert bracket_coordinates(2, 7, c) == -2.0 * 2.0 * 7.0
    assert bracket_coordinates(1, 2, c) == 0.0
    assert bracket_coordinates(7, 8, c) == 0.0


def test_hamiltonian_coefficients_frozen():
    assert HAM_I.coefficients == (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.25, -0.25)
    assert HAM_E.coefficients == tuple(
        (1.0 / 12.0 if i % 2 else -1.0 / 12.0) for i in range(6)) + (0.0, 0.0)


def test_hamiltonian_bracket_is_exactly_one_half():
    assert bracket_log_linear(HAM_I, HAM_E) == 0.5
    assert bracket_log_linear(HAM_E, HAM_I) == -0.5


def test_log_linear_value():
    f = LogLinearFunction((1.0, 0, 0, 0, 0, 0, 0, -1.0), 3.0)
    x = FGCoords((2.0, 1, 1, 1, 1, 1), (1, 4.0))
    assert abs(f.value(x) - (math.log(2.0) - math.log(4.0) + 3.0)) < 1e-15


def test_casimirs_bracket_to_zero_with_everything():
    from pantsflow.poisson import log_coordinate
    fns = casimir_log_functions()
    assert set(fns) == {"alpha1", "alpha2", "beta1", "beta2",
                        "gamma1", "gamma2"}
    for f in fns.values():
        for i in range(1, 9):
            assert bracket_log_linear(f, log_coordinate(i)) == 0.0
        assert bracket_log_linear(f, HAM_I) == 0.0
        assert bracket_log_linear(f, HAM_E) == 0.0


def test_casimir_log_coefficients_match_formulas():
    fns = casimir_log_functions()
    assert fns["alpha1"].coefficients == (1, 0, 0, 1, 0, 0, 0, 0)
    assert fns["alpha2"].coefficients == (0, -1, -1, 0, 0, 0, 1, 1)
    assert fns["beta1"].coefficients == (0, 0, 1, 0, 0, 1, 0, 0)
    assert fns["beta2"].coefficients == (0, 0, 0, -1, -1, 0, 1, 1)
    assert fns["gamma1"].coefficients == (0, 1, 0, 0, 1, 0, 0, 0)
    assert fns["gamma2"].coefficients == (-1, 0, 0, 0, 0, -1, 1, 1)


@given(coords_strategy, times)
@settings(deadline=None)
def test_eruption_scales_triangle_coordinates(c, t):
    r = eruption_flow(c, t)
    assert r.sigma == c.sigma
    assert r.tau[0] == c.tau[0] * math.exp(t)
    assert r.tau[1] == c.tau[1] / math.exp(t)


@given(coords_strategy, times)
@settings(deadline=None)
def test_hexagon_scales_alternating_edges(c, t):
    r = hexagon_flow(c, t)
    assert r.tau == c.tau
    et = math.exp(t)
    for i in range(6):
        want = c.sigma[i] * et if i % 2 == 0 else c.sigma[i] * (1.0 / et)
        assert r.sigma[i] == want


@given(coords_strategy, times, times)
@settings(deadline=None)
def test_flows_commute_exactly(c, s, t):
    one = hexagon_flow(eruption_flow(c, s), t)
    other = eruption_flow(hexagon_flow(c, t), s)
    assert one.as_tuple() == other.as_tuple()


@given(coords_strategy, times, times)
@settings(deadline=None)
def test_flow_group_law(c, s, t):
    one = eruption_flow(eruption_flow(c, s), t)
    other = eruption_flow(c, s + t)
    for a, b in zip(one.as_tuple(), other.as_tuple()):
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_eruption_is_hamiltonian_flow_of_its_generator():
    # d/dt x(t)|_0 must equal {x, E} = sum_i c_i * 2 eps_{ji} x_j (log rule)
    c = FGCoords((0.7, 1.3, 2.1, 0.4, 1.9, 0.8), (1.1, 0.6))
    h = 1e-6
    plus = eruption_flow(c, h).as_tuple()
    minus = eruption_flow(c, -h).as_tuple()
    x = c.as_tuple()
    for j in range(8):
        fd = (plus[j] - minus[j]) / (2.0 * h)
        rate = 2.0 * x[j] * math.fsum(
            HAM_E.coefficients[i] * EPSILON[j][i] for i in range(8))
        assert abs(fd - rate) < 1e-7 * (1.0 + abs(rate))


def test_mixed_flow_chart_action():
    c = FGCoords((1, 2, 3, 4, 5, 6), (7, 8))
    m = mixed_flow(c, 2.0, 0.3)
    assert abs(m.sigma[0] - 1.0 * math.exp(0.3)) < 1e-15
    assert abs(m.tau[0] - 7.0 * math.exp(2.0 * 0.3)) < 1e-13
    m2 = mixed_flow(c, 2.0, 0.3, "aI∘E")
    assert abs(m2.sigma[0] - 1.0 * math.exp(2.0 * 0.3)) < 1e-15
    assert abs(m2.tau[0] - 7.0 * math.exp(0.3)) < 1e-13


def test_mixed_flow_ascii_aliases():
    c = FGCoords((1, 2, 3, 4, 5, 6), (7, 8))
    assert mixed_flow(c, 1.5, 0.4, "IoaE").as_tuple() == \
        mixed_flow(c, 1.5, 0.4, "I∘aE").as_tuple()
    assert mixed_flow(c, 1.5, 0.4, "aIoE").as_tuple() == \
        mixed_flow(c, 1.5, 0.4, "aI∘E").as_tuple()
    with pytest.raises(ValueError):
        mixed_flow(c, 1.5, 0.4, "EoI")


def test_coordinate_flow_laws():
    c = FGCoords((1.0, 2.0, 3.0, 4.0, 5.0, 6.0), (7.0, 8.0))
    t = 0.5
    r = coordinate_flow(c, "sigma1", t)
    assert r.sigma == c.sigma
    assert abs(r.tau[0] - 7.0 * math.exp(-t * 1.0)) < 1e-13
    assert abs(r.tau[1] - 8.0 * math.exp(t * 1.0)) < 1e-13
    r2 = coordinate_flow(c, "tau1", t)
    assert r2.tau == c.tau
    for i in range(6):
        sign = 1.0 if i % 2 == 0 else -1.0
        want = c.sigma[i] * math.exp(sign * t * 7.0)
        assert abs(r2.sigma[i] - want) < 1e-11 * (1.0 + want)
    # numeric index names the same flow
    assert coordinate_flow(c, 7, t).as_tuple() == r2.as_tuple()
    with pytest.raises(ValueError):
        coordinate_flow(c, "sigma9", t)


def test_symplectic_form_leaf_value():
    p = LeafPoint(unipotent_leaf(), 1.3, 0.8)
    got = symplectic_form_leaf(p, (1.0, 0.0), (0.0, 1.0))
    assert abs(got - 1.0 / (2.0 * 1.3 * 0.8)) < 1e-15
    assert symplectic_form_leaf(p, (1.0, 0.0), (1.0, 0.0)) == 0.0


def test_hamiltonian_field_pairs_with_minus_differential():
    U = unipotent_leaf()
    p = LeafPoint(U, 1.3, 0.8)
    f = trace_function(U, CurveId("fig8"))
    X = hamiltonian_vf_leaf(p, f)
    h = 1e-6
    fs = (f(1.3 + h, 0.8) - f(1.3 - h, 0.8)) / (2.0 * h)
    ft = (f(1.3, 0.8 + h) - f(1.3, 0.8 - h)) / (2.0 * h)
    for w in ((1.0, 0.0), (0.0, 1.0), (0.7, -0.4)):
        lhs = symplectic_form_leaf(p, X, w)
        rhs = -(fs * w[0] + ft * w[1])
        assert abs(lhs - rhs) < 1e-5 * (1.0 + abs(rhs))


def test_hamiltonian_field_frozen_value():
    # fig8 on the leaf through the (3, 6, 8) hyperbolic point
    F = fuchsian_leaf(3.0, 6.0, 8.0)
    f = trace_function(F, CurveId("fig8"))
    vf = hamiltonian_vf_leaf(LeafPoint(F, 2.0, 1.0), f)
    assert abs(vf[0] - (-137.5)) < 1e-9
    assert abs(vf[1] - 10.0 / 3.0) < 1e-9

"""Numerical verification suites for the structural identities.

The conjugator matrices below realize the eruption and hexagon flows
as explicit conjugations of the boundary holonomies on the all-ones
leaf; the suites check them on grids, confirm the group relation and
eigenvalue-ratio predictions on random sweeps, cross-check the closed
trace forms against the matrix oracle, and probe convexity and the
bracket structure constants.  Failures are reported, never thrown.
"""

import math
import random
from concurrent.futures import ThreadPoolExecutor

from .coords import FGCoords, LeafPoint, LengthVector, fuchsian_leaf
from .dynamics import convexity_probe
from .holonomy import eigenvalue_ratio_report, peripheral_holonomies
from .poisson import (HAM_E, HAM_I, bracket_log_linear, casimir_log_functions,
                      eruption_flow, hamiltonian_vf_leaf, hexagon_flow,
                      log_coordinate)
from .proj_linalg import IDENTITY3, mat_inv, mat_mul, projective_distance
from .traces import CurveId, trace_closed_form, trace_function, trace_matrix_oracle


def unipotent_coords(s1, t1):
    """Full coordinates of the chart point (s1, t1) on the all-ones leaf."""
    return FGCoords((s1, 1.0 / s1, s1, 1.0 / s1, s1, 1.0 / s1),
                    (t1, 1.0 / t1))


def _diag(d1, d2, d3):
    return ((d1, 0.0, 0.0), (0.0, d2, 0.0), (0.0, 0.0, d3))


def zeta_alpha(t, s1, t1):
    et = math.exp(t)
    d1 = math.exp(-2.0 * t / 3.0) * (1.0 + et * t1) ** (2.0 / 3.0) \
        / (1.0 + t1) ** (2.0 / 3.0)
    d2 = math.exp(t / 3.0) * (1.0 + t1) ** (1.0 / 3.0) \
        / (1.0 + et * t1) ** (1.0 / 3.0)
    return _diag(d1, d2, d2)


def zeta_beta(t, s1, t1):
    et = math.exp(t)
    pref = (1.0 + t1) ** (1.0 / 3.0) \
        / (math.exp(t / 3.0) * t1 * (1.0 + et * t1) ** (1.0 / 3.0))
    m = ((0.0,
          -(s1 - 1.0) * (et * t1 + 1.0),
          -(s1 * t1 + s1 - 1.0) * (et * t1 + 1.0) / (t1 + 1.0)),
         (0.0,
          s1 + s1 * et * t1 - et * t1,
          (s1 * (t1 + 1.0) * (et * t1 + 1.0) - et * t1 + t1) / (t1 + 1.0)),
         (-et * t1 ** 2,
          -s1 * (et * t1 + 1.0) - et * t1 * (t1 + 1.0),
          -s1 * (et * t1 + 1.0)
          - t1 * (et * (2.0 * t1 + 1.0) + 1.0) / (t1 + 1.0)))
    return tuple(tuple(pref * x for x in row) for row in m)


def zeta_gamma(t, s1, t1):
    et = math.exp(t)
    d1 = (1.0 + t1) ** (1.0 / 3.0) / (1.0 + et * t1) ** (1.0 / 3.0)
    d3 = (1.0 + et * t1) ** (2.0 / 3.0) / (1.0 + t1) ** (2.0 / 3.0)
    return _diag(d1, d1, d3)


def eta_alpha(t, s1, t1):
    et = math.exp(t)
    em = math.exp(-t / 3.0)
    return ((em * (s1 * et + 1.0) / (s1 + 1.0),
             s1 * em * (et - 1.0) * (t1 + 1.0) / ((s1 + 1.0) * t1),
             0.0),
            (0.0, em, 0.0),
            (0.0, 0.0,
             (s1 + 1.0) * math.exp(2.0 * t / 3.0) / (s1 * et + 1.0)))


def eta_beta(t, s1, t1):
    et = math.exp(t)
    e2t = math.exp(2.0 * t)
    em = math.exp(-t / 3.0)
    ep = math.exp(t / 3.0)
    return ((0.0,
             em * (t1 + 1.0) * (s1 ** 2 * et - 1.0) / ((s1 + 1.0) * t1),
             em * (s1 ** 2 * et * (t1 + 1.0) + s1 * et * t1 - 1.0)
             / ((s1 + 1.0) * t1)),
            (0.0,
             -em * (s1 + s1 ** 2 * et * (t1 + 1.0) - t1) / ((s1 + 1.0) * t1),
             -s1 * em * (s1 * et * (t1 + 1.0) + et * t1 + 1.0)
             / ((s1 + 1.0) * t1)),
            ((s1 + 1.0) * math.exp(2.0 * t / 3.0) * t1 / (s1 * et + 1.0),
             (t1 + 1.0) * (s1 ** 2 * et * (t1 + 2.0)
                           + s1 * (2.0 * et * t1 + 1.0)
                           + s1 ** 3 * e2t + et * t1)
             / ((s1 + 1.0) * ep * t1 * (s1 * et + 1.0)),
             (s1 ** 3 * e2t * (t1 + 1.0)
              + s1 ** 2 * et * ((et + 3.0) * t1 + 2.0)
              + s1 * ((4.0 * et + 1.0) * t1 + 1.0)
              + (et + 1.0) * t1)
             / ((s1 + 1.0) * ep * t1 * (s1 * et + 1.0))))


def eta_gamma(t, s1, t1):
    et = math.exp(t)
    em = math.exp(-t / 3.0)
    return (((s1 + 1.0) * math.exp(2.0 * t / 3.0) / (s1 * et + 1.0), 0.0, 0.0),
            (0.0, em, 0.0),
            (0.0,
             s1 * em * (et - 1.0) * (t1 + 1.0) / (s1 + 1.0),
             em * (s1 * et + 1.0) / (s1 + 1.0)))


def _conjugation_report(c0, ct, matrices, tol):
    before = peripheral_holonomies(c0)
    after = peripheral_holonomies(ct)
    report = {}
    worst = 0.0
    for name, z, m0, mt in zip(("alpha", "beta", "gamma"), matrices,
                               before, after):
        d = projective_distance(mat_mul(mat_mul(z, m0), mat_inv(z)), mt)
        report[name] = d
        worst = max(worst, d)
    report["worst_error"] = worst
    report["ok"] = worst <= tol
    return report


def verify_conjugator_eruption(s1, t1, t, tol=1e-9):
    """Check the eruption conjugators at an all-ones-leaf chart point.

    Each boundary holonomy at the flowed point (tau1 scaled by e^t)
    must equal the conjugate of the original by the matching matrix,
    up to scale.
    """
    if not -5.0 <= t <= 5.0:
        raise ValueError("flow time must lie in [-5, 5]")
    c0 = unipotent_coords(s1, t1)
    return _conjugation_report(
        c0, eruption_flow(c0, t),
        (zeta_alpha(t, s1, t1), zeta_beta(t, s1, t1), zeta_gamma(t, s1, t1)),
        tol)


def verify_conjugator_hexagon(s1, t1, t, tol=1e-9):
    """Check the hexagon conjugators; the flowed point has sigma1 * e^t."""
    if not -5.0 <= t <= 5.0:
        raise ValueError("flow time must lie in [-5, 5]")
    c0 = unipotent_coords(s1, t1)
    return _conjugation_report(
        c0, hexagon_flow(c0, t),
        (eta_alpha(t, s1, t1), eta_beta(t, s1, t1), eta_gamma(t, s1, t1)),
        tol)


def reference_ode_rhs(s1, t1):
    """Displayed right-hand sides of the orbit ODE for the figure-eight
    trace on the leaf through the (3, 6, 8) hyperbolic point."""
    sd = (-6.0 * s1 ** 3 * (t1 ** 2 - 1.0)
          + s1 ** 2 * (17.0 - 90.0 * t1 ** 2)
          + s1 * (15.0 - 408.0 * t1 ** 2)
          - 576.0 * t1 ** 2 + 4.0) / (12.0 * t1)
    td = (t1 + 1.0) * (12.0 * s1 ** 3 * (t1 + 1.0)
                       + s1 ** 2 * (90.0 * t1 + 17.0)
                       - 576.0 * t1 - 4.0) / (12.0 * s1)
    return sd, td


def verify_fuchsian_ode_display(n, tol=1e-9):
    """Compare the displayed ODE against the Hamiltonian field at n
    random chart points of the (3, 6, 8) hyperbolic leaf."""
    if n < 1:
        raise ValueError("need at least one sample")
    leaf = fuchsian_leaf(3.0, 6.0, 8.0)
    f = trace_function(leaf, CurveId("fig8"), route="closed")
    rng = random.Random(97531)
    worst = 0.0
    passed = 0
    for _ in range(n):
        s1 = math.exp(rng.uniform(-1.0, 1.0))
        t1 = math.exp(rng.uniform(-1.0, 1.0))
        vf = hamiltonian_vf_leaf(LeafPoint(leaf, s1, t1), f)
        disp = reference_ode_rhs(s1, t1)
        err = max(abs(vf[0] - disp[0]) / max(1.0, abs(disp[0])),
                  abs(vf[1] - disp[1]) / max(1.0, abs(disp[1])))
        worst = max(worst, err)
        if err <= tol:
            passed += 1
    return {"samples": n, "passed": passed, "failed": n - passed,
            "worst_error": worst, "ok": passed == n}


def _map(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _aggregate(name, seed, errors, tol):
    failed = sum(1 for e in errors if e > tol)
    worst = max(errors) if errors else 0.0
    return {"suite": name, "passed": len(errors) - failed, "failed": failed,
            "worst_error": worst, "seed": seed}


def _random_coords(rng):
    lo, hi = math.log(0.1), math.log(10.0)
    return FGCoords(tuple(math.exp(rng.uniform(lo, hi)) for _ in range(6)),
                    tuple(math.exp(rng.uniform(lo, hi)) for _ in range(2)))


def _random_leaf(rng):
    return LengthVector(tuple(math.exp(rng.uniform(-1.5, 1.5))
                              for _ in range(6)))


def _relation_suite(seed, samples, threads):
    rng = random.Random(seed * 1000003 + 1)
    items = [_random_coords(rng) for _ in range(samples)]

    def check(c):
        a, b, cm = peripheral_holonomies(c)
        return projective_distance(mat_mul(mat_mul(a, b), cm), IDENTITY3)

    return _aggregate("relation", seed, _map(check, items, threads), 1e-9)


def _eigenvalue_suite(seed, samples, threads):
    rng = random.Random(seed * 1000003 + 2)
    items = [_random_coords(rng) for _ in range(samples)]

    def check(c):
        report = eigenvalue_ratio_report(c)
        return max(max(report[g]["errors"]) for g in ("a", "b", "c"))

    return _aggregate("eigenvalue_ratios", seed,
                      _map(check, items, threads), 1e-8)


def _closed_oracle_suite(seed, samples, threads):
    rng = random.Random(seed * 1000003 + 3)
    ones = LengthVector((1.0,) * 6)
    items = []
    for i in range(samples):
        s1 = math.exp(rng.uniform(-1.5, 1.5))
        t1 = math.exp(rng.uniform(-1.5, 1.5))
        kind = i % 4
        if kind == 0:
            items.append((CurveId("fig8"), _random_leaf(rng), s1, t1))
        elif kind == 1:
            items.append((CurveId("fig8_inv"), _random_leaf(rng), s1, t1))
        elif kind == 2:
            items.append((CurveId("commutator"), ones, s1, t1))
        else:
            items.append((CurveId("power", k=rng.randint(1, 6)), ones, s1, t1))

    def check(item):
        curve, leaf, s1, t1 = item
        p = LeafPoint(leaf, s1, t1)
        closed = trace_closed_form(p, curve)
        oracle = trace_matrix_oracle(p, curve)
        return abs(closed - oracle) / max(1.0, abs(oracle))

    return _aggregate("closed_oracle", seed, _map(check, items, threads), 1e-9)


def _conjugator_suite(seed, samples, threads):
    items = [(s1, t1, t)
             for s1 in (0.5, 1.0, 2.0)
             for t1 in (0.5, 1.0, 2.0)
             for t in (-2.0, -1.0, 1.0, 2.0)]

    def check(item):
        s1, t1, t = item
        return max(verify_conjugator_eruption(s1, t1, t)["worst_error"],
                   verify_conjugator_hexagon(s1, t1, t)["worst_error"])

    return _aggregate("conjugators", seed, _map(check, items, threads), 1e-9)


def _convexity_suite(seed, samples, threads):
    rng = random.Random(seed * 1000003 + 4)
    ones = LengthVector((1.0,) * 6)
    curves = (CurveId("fig8"), CurveId("fig8_sym"), CurveId("commutator"),
              CurveId("power", k=2), CurveId("power", k=4))
    items = []
    for i in range(samples):
        curve = curves[i % len(curves)]
        leaf = ones if curve.tag in ("commutator", "power") \
            else _random_leaf(rng)
        q = (math.exp(rng.uniform(-1.0, 1.0)), math.exp(rng.uniform(-1.0, 1.0)))
        a = rng.choice((-2.0, -1.0, -0.5, 0.5, 1.0, 2.0))
        variant = rng.choice(("I∘aE", "aI∘E"))
        items.append((curve, leaf, q, a, variant))

    def check(item):
        curve, leaf, q, a, variant = item
        m = convexity_probe(leaf, curve, q, a, variant, n=21)
        # report the violation margin; 0 means strictly convex as expected
        return max(0.0, -m) if m <= 0.0 else 0.0

    return _aggregate("convexity", seed, _map(check, items, threads), 0.0)


def _structure_suite(seed, samples, threads):
    rng = random.Random(seed * 1000003 + 5)
    errors = []
    errors.append(abs(bracket_log_linear(HAM_I, HAM_E) - 0.5))
    casimirs = casimir_log_functions()
    for fn in casimirs.values():
        for i in range(1, 9):
            errors.append(abs(bracket_log_linear(fn, log_coordinate(i))))
        errors.append(abs(bracket_log_linear(fn, fn)))
    for _ in range(max(1, samples // 10)):
        c = _random_coords(rng)
        s = rng.uniform(-2.0, 2.0)
        t = rng.uniform(-2.0, 2.0)
        one = hexagon_flow(eruption_flow(c, s), t)
        other = eruption_flow(hexagon_flow(c, t), s)
        errors.append(max(abs(x - y) for x, y in
                          zip(one.as_tuple(), other.as_tuple())))
    return _aggregate("structure_constants", seed, errors, 0.0)


def _fuchsian_suite(seed, samples, threads):
    report = verify_fuchsian_ode_display(samples)
    return {"suite": "fuchsian_ode", "passed": report["passed"],
            "failed": report["failed"], "worst_error": report["worst_error"],
            "seed": seed}


_SUITES = (
    ("relation", _relation_suite),
    ("eigenvalue_ratios", _eigenvalue_suite),
    ("closed_oracle", _closed_oracle_suite),
    ("conjugators", _conjugator_suite),
    ("convexity", _convexity_suite),
    ("structure_constants", _structure_suite),
    ("fuchsian_ode", _fuchsian_suite),
)

SUITE_NAMES = tuple(name for name, _ in _SUITES)


def run_suite(seed=42, samples=200, threads=None, only=None):
    """Run the verification suites and return their reports.

    Deterministic for a fixed seed regardless of threads; samples=0
    yields an empty report.  only selects a single suite by name.
    """
    if samples == 0:
        return []
    if only is not None and only not in SUITE_NAMES:
        raise ValueError("unknown suite %r" % (only,))
    reports = []
    for name, fn in _SUITES:
        if only is not None and name != only:
            continue
        reports.append(fn(seed, samples, threads))
    return reports

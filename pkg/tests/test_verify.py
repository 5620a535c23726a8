"""Verification suites: determinism, coverage, mutation sensitivity."""

import math

import pytest

import pantsflow.verify as verify
from pantsflow.verify import (SUITE_NAMES, run_suite, unipotent_coords,
                              verify_conjugator_eruption,
                              verify_conjugator_hexagon,
                              verify_fuchsian_ode_display)


def test_zero_samples_yield_no_reports():
    assert run_suite(samples=0) == []


def test_all_suites_pass_on_a_small_run():
    reports = run_suite(seed=42, samples=24)
    assert [r["suite"] for r in reports] == list(SUITE_NAMES)
    for r in reports:
        assert r["failed"] == 0, r
        assert r["seed"] == 42
        assert r["passed"] > 0


def test_runs_are_deterministic_and_thread_independent():
    a = run_suite(seed=7, samples=12)
    b = run_suite(seed=7, samples=12)
    c = run_suite(seed=7, samples=12, threads=3)
    assert a == b == c


def test_seed_changes_the_sweep():
    a = run_suite(seed=1, samples=12, only="relation")
    b = run_suite(seed=2, samples=12, only="relation")
    assert a[0]["worst_error"] != b[0]["worst_error"]


def test_suite_filter():
    reports = run_suite(seed=3, samples=8, only="conjugators")
    assert len(reports) == 1
    assert reports[0]["suite"] == "conjugators"
    with pytest.raises(ValueError):
        run_suite(samples=8, only="nonsense")


def test_unipotent_coords_pattern():
    c = unipotent_coords(2.0, 0.25)
    assert c.sigma == (2.0, 0.5, 2.0, 0.5, 2.0, 0.5)
    assert c.tau == (0.25, 4.0)


def test_conjugators_hold_on_sample_points():
    r = verify_conjugator_eruption(0.5, 2.0, 1.5)
    assert r["ok"]
    assert r["worst_error"] <= 1e-9
    assert set(r) == {"alpha", "beta", "gamma", "worst_error", "ok"}
    r = verify_conjugator_hexagon(2.0, 0.5, -1.5)
    assert r["ok"]


def test_conjugators_reject_large_times():
    with pytest.raises(ValueError):
        verify_conjugator_eruption(1.0, 1.0, 5.5)
    with pytest.raises(ValueError):
        verify_conjugator_hexagon(1.0, 1.0, -6.0)


def test_ode_display_agrees():
    report = verify_fuchsian_ode_display(10)
    assert report["ok"]
    assert report["worst_error"] <= 1e-9
    with pytest.raises(ValueError):
        verify_fuchsian_ode_display(0)


def test_corrupted_closed_form_is_caught(monkeypatch):
    original = verify.trace_closed_form
    monkeypatch.setattr(verify, "trace_closed_form",
                        lambda p, curve: original(p, curve) + 1e-5)
    report = run_suite(seed=42, samples=16, only="closed_oracle")[0]
    assert report["failed"] > 0


def test_corrupted_conjugator_is_caught(monkeypatch):
    # moving the squared factor to the wrong diagonal slot changes the
    # conjugator by more than a scalar, which the check must notice
    def wrong(t, s1, t1):
        et = math.exp(t)
        r = ((1.0 + et * t1) / (1.0 + t1)) ** (1.0 / 3.0)
        return ((r * r, 0.0, 0.0), (0.0, 1.0 / r, 0.0), (0.0, 0.0, 1.0 / r))

    monkeypatch.setattr(verify, "zeta_gamma", wrong)
    report = run_suite(seed=42, samples=4, only="conjugators")[0]
    assert report["failed"] > 0


def test_corrupted_ode_display_is_caught(monkeypatch):
    original = verify.reference_ode_rhs
    monkeypatch.setattr(verify, "reference_ode_rhs",
                        lambda s1, t1: tuple(x + 1e-6
                                             for x in original(s1, t1)))
    report = run_suite(seed=42, samples=8, only="fuchsian_ode")[0]
    assert report["failed"] > 0

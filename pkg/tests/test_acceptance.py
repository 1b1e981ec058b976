"""Acceptance criteria 1-9.

Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line (outside pytest's
capture) and then asserts the same condition.
"""
import time

import mpmath
import numpy as np
import oracles
import pytest

from qellip import (
    DEFAULT_POLICY,
    SigmaContext,
    abq_binomial,
    abq_number,
    abq_weight,
    f_kernel,
    f_kernel_d1,
    kernel_interval,
    q_binomial,
    sigma,
    theta_kernel,
    theta_kernel_d1_closed,
)
from qellip.verifier import ScanSpec, run_scan
from qellip.verifier.catalog import THEOREMS
from qellip.verifier.limits import run_limits
from qellip.verifier.suite import run_suite

SEED = 20_240_601


@pytest.fixture
def announce(capsys):
    def say(n: int, title: str, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {title}: {detail}")
    return say


@pytest.fixture(scope="module")
def suite_runs():
    start = time.perf_counter()
    first = run_suite(seed=SEED)
    elapsed = time.perf_counter() - start
    second = run_suite(seed=SEED)
    return first, second, elapsed


def _scan(pid, n, seed):
    return run_scan(ScanSpec(pid, random_points=n, seed=seed))


def test_1_theta_identities(announce):
    start = time.perf_counter()
    reports = [_scan(pid, 1000, SEED + i) for i, pid in
               enumerate(("id_theta_inversion", "id_theta_quasiperiod", "id_theta_addition"))]
    elapsed = time.perf_counter() - start
    worst = max(r.max_residual for r in reports)
    tested = min(r.points_tested for r in reports)
    ok = worst <= 1e-10 and tested >= 1000 and elapsed < 5
    announce(1, "theta identity suite", ok,
             f"max residual {worst:.2e} (<= 1e-10), min points {tested} (>= 1000), "
             f"{elapsed:.2f} s (< 5 s)")
    assert ok


def test_2_addition_formulas(announce):
    reports = [_scan(pid, 10_000, SEED + i) for i, pid in enumerate(("id_abq_addition", "id_ell_addition"))]
    worst = max(r.max_residual for r in reports)
    skipped = sum(r.domain_skips for r in reports)
    tested = min(r.points_tested for r in reports)
    ok = worst <= 1e-10 and all(r.passed for r in reports)
    announce(2, "addition formulas", ok,
             f"max residual {worst:.2e} (<= 1e-10) over 2 x 10^4 sampled points, "
             f"min tested {tested}, overflow skips {skipped}")
    assert ok


def _rel_diff(closed, fd):
    return np.abs(closed - fd) / np.maximum(np.abs(closed), np.abs(fd))


def test_3_derivative_checks(announce):
    rng = np.random.default_rng(SEED)
    n = 1000
    h = DEFAULT_POLICY.fd_step

    q = rng.uniform(0.05, 0.95, n)
    r = rng.uniform(0.01, 3.0, n)
    x = r + rng.uniform(0, 3.0, n)
    u = rng.uniform(0.001, 0.999, n)
    # f is within 1e-7 of 1 when r is small, so the difference quotient is
    # formed at 30 digits; the step scales with the distance to the pole q^-x
    step = h * np.minimum(1.0, q**-x - u)
    closed = f_kernel_d1(u, x, r, q)
    with mpmath.workdps(30):
        fd = np.array([float((f_kernel(mpmath.mpf(ui) + si, *map(mpmath.mpf, (xi, ri, qi)))
                              - f_kernel(mpmath.mpf(ui) - si, *map(mpmath.mpf, (xi, ri, qi))))
                             / (2 * si))
                       for ui, si, xi, ri, qi in zip(u, step, x, r, q)])
    rational_err = float(_rel_diff(closed, fd).max())
    rational_pos = int(np.count_nonzero(closed >= 0))

    q = rng.uniform(0.1, 0.9, n)
    r = rng.uniform(0.05, 1.5, n)
    x = r + rng.uniform(0, 2.5, n)
    p = rng.uniform(0.001, 0.999, n) * q ** (2 * r)
    lo, hi = kernel_interval(x, r, q, p)
    u = lo + (hi - lo) * rng.uniform(0.01, 0.99, n)
    step = h * (hi - lo)
    closed = theta_kernel_d1_closed(u, x, r, q, p)
    fd = (theta_kernel(u + step, x, r, q, p) - theta_kernel(u - step, x, r, q, p)) / (2 * step)
    theta_err = float(_rel_diff(closed, fd).max())
    theta_pos = int(np.count_nonzero(closed >= 0))
    below = int(np.count_nonzero(u * q**x < np.sqrt(p)))

    ok = max(rational_err, theta_err) <= 1e-6 and rational_pos == 0 and theta_pos == 0
    announce(3, "derivative checks", ok,
             f"FD agreement rational {rational_err:.1e}, theta {theta_err:.1e} (<= 1e-6); "
             f"non-negative closed f': rational {rational_pos}/{n}, theta {theta_pos}/{n} "
             f"({below} sampled points have u q^x < sqrt(p), where theta(u^2 q^(2x); p) < 0)")
    assert max(rational_err, theta_err) <= 1e-6
    assert rational_pos == 0
    assert theta_pos == 0, "theta-kernel derivative is positive where u q^x < sqrt(p)"


def test_4_sigma_machinery(announce):
    h = DEFAULT_POLICY.fd_step
    unit_err = max(abs((sigma(h, ctx) - sigma(-h, ctx)) / (2 * h) - 1)
                   for ctx in (SigmaContext.for_nome(p) for p in (0.0, 0.01, 0.07, 0.2, 0.5)))
    reports = [_scan(pid, 1000, SEED + i) for i, pid in enumerate(("id_sigma_derivative2", "id_wp_relation"))]
    worst = max(r.max_residual for r in reports)
    ok = unit_err <= 1e-8 and worst <= 1e-6
    announce(4, "sigma machinery", ok,
             f"|sigma'(0) - 1| = {unit_err:.1e} (<= 1e-8), zeta/wp residual {worst:.1e} (<= 1e-6)")
    assert ok


def test_5_theorem_certification(announce, suite_runs):
    first, _, elapsed = suite_runs
    by_id = {r.property_id: r for r in first.reports}
    theorems = [by_id[t.id] for t in THEOREMS]
    bad = [r.property_id for r in theorems if r.violations or r.points_tested < 10_000 or not r.passed]
    fewest = min(r.points_tested for r in theorems)
    ok = not bad and len(theorems) == 11 and elapsed < 60
    announce(5, "theorem certification", ok,
             f"11 theorems, min points {fewest} (>= 10^4), confirmed violations "
             f"{sum(r.violations for r in theorems)}, full suite {elapsed:.1f} s (< 60 s)"
             + (f", failing {bad}" if bad else ""))
    assert ok


def test_6_negative_controls(announce, suite_runs):
    by_id = {r.property_id: r for r in suite_runs[0].reports}
    controls = [by_id["neg_abq_direct_a_gt_b"], by_id["neg_bq_binomial_lower"]]
    counts = {r.property_id: r.violations for r in controls}
    ok = all(v >= 1 for v in counts.values())
    announce(6, "negative controls", ok, f"confirmed violations {counts} (each >= 1)")
    assert ok


def test_7_degeneration_chain(announce):
    reports = run_limits()
    failed = [r.id for r in reports if not (r.passed and r.monotone)]
    worst = max(r.extrapolated_error for r in reports)
    ok = not failed
    announce(7, "degeneration chain", ok,
             f"{len(reports)} limit/reduction checks, worst error {worst:.1e} (<= "
             f"{DEFAULT_POLICY.report_tol:.0e}), all monotone" + (f", failing {failed}" if failed else ""))
    assert ok


def test_8_rational_oracle(announce):
    points = oracles.rational_points()
    worst = 0.0
    for x, k, a, b, q in points:
        fa, fb, fq = float(a), float(b), float(q)
        worst = max(
            worst,
            oracles.rel_err(abq_number(x, fa, fb, fq), oracles.abq_number(x, a, b, q)),
            oracles.rel_err(abq_weight(x, fa, fb, fq), oracles.abq_weight(x, a, b, q)),
            oracles.rel_err(abq_binomial(x, k, fa, fb, fq), oracles.abq_binomial(x, k, a, b, q)),
            oracles.rel_err(q_binomial(x, k, fq), oracles.gaussian_binomial(x, k, q)),
        )
    ok = len(points) >= 25 and worst <= 1e-12
    announce(8, "rational oracle", ok, f"{len(points)} points (>= 25), worst relative error {worst:.1e} (<= 1e-12)")
    assert ok


def test_9_determinism(announce, suite_runs):
    first, second, _ = suite_runs
    a, b = first.to_json(), second.to_json()
    ok = a == b
    announce(9, "determinism", ok, f"two suite runs, {len(a)} JSON bytes each, identical={ok}")
    assert ok

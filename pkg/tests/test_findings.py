"""Places where a stated claim does not hold as written.

Each test pins a concrete counterexample, confirmed in high precision where
rounding could matter.
"""
import math

import mpmath
import numpy as np

from qellip import (
    HIGH_POLICY,
    abq_binomial,
    aq_binomial,
    elliptic_weight,
    kernel_interval,
    log_derivative_terms,
    theta_kernel,
    theta_kernel_d1_closed,
)
from qellip.verifier import ScanSpec, run_scan
from qellip.verifier.checks import check_ell_shifted

ELL_POINT = dict(x=3.5965, y=3.5459, r=1.5814, a=0.16669, b=0.74935, q=0.81675, p=0.034649)


def test_theta_kernel_increases_below_sqrt_p():
    # on (delta, sqrt(p) q^-x) theta(u^2 q^{2x}; p) < 0, so f' > 0
    x, r, q, p = 1.0, 0.5, 0.5, 0.01
    lo, hi = kernel_interval(x, r, q, p)
    split = math.sqrt(p) * q**-x
    assert lo < split < hi
    u = 0.5 * (lo + split)
    h = 1e-7
    fd = (theta_kernel(u + h, x, r, q, p) - theta_kernel(u - h, x, r, q, p)) / (2 * h)
    assert theta_kernel_d1_closed(u, x, r, q, p) > 0
    assert fd > 0
    assert theta_kernel(split, x, r, q, p) > theta_kernel(u, x, r, q, p)


def test_termwise_inequality_fails_below_sqrt_p():
    rng = np.random.default_rng(5)
    failures = 0
    for _ in range(2000):
        q = rng.uniform(0.1, 0.9)
        r = rng.uniform(0.05, 1.5)
        x = r + rng.uniform(0, 2)
        p = rng.uniform(0.001, 0.5) * q ** (2 * r)
        lo, _ = kernel_interval(x, r, q, p)
        u = rng.uniform(lo, math.sqrt(p) * q**-x)
        lhs1, lhs2, rhs1, rhs2 = log_derivative_terms(0, u, x, q, p)
        failures += lhs1 + lhs2 <= rhs1 + rhs2
    assert failures > 0


def test_elliptic_weight_can_be_negative_with_positive_numbers():
    pt = ELL_POINT
    a2, b2 = pt["a"] * pt["q"] ** (2 * pt["r"]), pt["b"] * pt["q"] ** pt["r"]
    w = elliptic_weight(pt["y"] - pt["r"], a2, b2, pt["q"], pt["p"])
    assert w < -0.07
    with mpmath.workdps(40):
        mp = {k: mpmath.mpf(v) for k, v in pt.items()}
        lhs, rhs = check_ell_shifted(**mp, pol=HIGH_POLICY)
        assert lhs > 0 and rhs > 0
        assert (lhs - rhs) / max(lhs, rhs) < -0.2


def test_elliptic_shifted_literal_domain_has_violations():
    report = run_scan(ScanSpec("neg_ell_shifted_literal", random_points=20_000, seed=1))
    assert report.violations >= 1


def test_elliptic_shifted_restricted_domain_is_clean():
    report = run_scan(ScanSpec("check_ell_shifted", random_points=20_000, seed=1))
    assert report.violations == 0 and report.points_tested >= 19_000


def test_b_limit_needs_integral_k_or_x_minus_k():
    # x = 3.7, k = 1.5: the b-dependent part is log-periodic in b
    x, k, a, q = 3.7, 1.5, 0.3, 0.45
    target = aq_binomial(x, k, a, q)
    errs = [abs(abq_binomial(x, k, a, 10.0**-m, q) - target) / target for m in range(2, 14)]
    assert min(errs[-4:]) > 0.5
    # integral k converges linearly in b
    errs_int = [abs(abq_binomial(4.5, 2, a, 10.0**-m, q) - aq_binomial(4.5, 2, a, q)) for m in (4, 8)]
    assert errs_int[1] < 1e-3 * errs_int[0]

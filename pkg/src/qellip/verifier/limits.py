"""Degeneration chain: elliptic -> a,b;q -> a;q / (b;q) -> q, plus exact reductions.

A limit ``t -> 0`` is sampled on a geometric sequence of ``t``.  It passes if
the error against the limiting object decreases monotonically (or is already
below ``report_tol``) and the polynomial extrapolation to ``t = 0`` through
the last three samples lands within ``report_tol``.  Errors are relative to
``max(|target|, 1)``.

The ``b -> 0`` and ``b -> infinity`` binomial limits only exist when ``k`` or
``x - k`` is an integer: otherwise the ``b``-dependent part is a balanced
quotient of theta functions in ``b``, which oscillates log-periodically.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import asdict, dataclass

from .._base import DEFAULT_POLICY, PrecisionPolicy
from ..binomials import abq_binomial, aq_binomial, bq_binomial, q_binomial
from ..elliptic import elliptic_binomial, elliptic_number, elliptic_weight
from ..numbers import (
    abq_number,
    abq_weight,
    aq_number,
    bq_number,
    q_number,
    quantum_number,
)

# sample points (x, a, b, q); 0 < a < b < 1 keeps every factor positive
POINTS = [
    (0.5, 0.3, 0.6, 0.3),
    (1.7, 0.2, 0.5, 0.7),
    (3.2, 0.45, 0.8, 0.5),
    (2.0, 0.1, 0.9, 0.85),
    (4.6, 0.6, 0.7, 0.4),
]
BINOMIAL_K = (0, 1, 2, 3, 1.5)
P_STEPS = (1e-3, 1e-5, 1e-7, 1e-9)
PARAM_STEPS = tuple(10.0 ** -m for m in range(2, 9))
# b -> infinity only settles once b q^{1+x} >> 1
INF_STEPS = tuple(10.0 ** -m for m in range(5, 12))


@dataclass
class LimitReport:
    id: str
    description: str
    steps: list
    errors: list
    extrapolated_error: float
    monotone: bool
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _extrapolate(ts, vs):
    """Lagrange interpolation at 0 through the given nodes."""
    out = 0.0
    for i, (ti, vi) in enumerate(zip(ts, vs)):
        w = 1.0
        for j, tj in enumerate(ts):
            if j != i:
                w *= tj / (tj - ti)
        out += w * vi
    return out


def _rel(value, target):
    return abs(value - target) / max(abs(target), 1.0)


def check_limit(id_: str, description: str, approach: Callable, target: Callable,
                cases, steps, tol: float) -> LimitReport:
    """``approach(case, t)`` should tend to ``target(case)`` as ``t -> 0``."""
    errors = []
    values = {}
    for t in steps:
        errs = []
        for i, case in enumerate(cases):
            v = approach(case, t)
            values.setdefault(i, []).append(v)
            errs.append(_rel(v, target(case)))
        errors.append(max(errs))
    extrap = max(_rel(_extrapolate(steps[-3:], vals[-3:]), target(cases[i]))
                 for i, vals in values.items())
    monotone = all(e2 < e1 or e2 <= tol for e1, e2 in zip(errors, errors[1:]))
    return LimitReport(id_, description, list(steps), errors, extrap, monotone, tol,
                       bool(monotone and extrap <= tol))


def check_exact(id_: str, description: str, lhs: Callable, rhs: Callable, cases,
                tol: float) -> LimitReport:
    """Exact specializations, reported with an empty step sequence."""
    err = max(_rel(lhs(c), rhs(c)) for c in cases)
    return LimitReport(id_, description, [], [err], err, True, tol, bool(err <= tol))


def _binomial_cases():
    cases = [(x + 3, k, a, b, q) for (x, a, b, q) in POINTS for k in BINOMIAL_K]
    cases.append((3.5, 1.5, 0.3, 0.6, 0.45))
    return cases


def _integral(v) -> bool:
    return float(v).is_integer()


def run_limits(pol: PrecisionPolicy = DEFAULT_POLICY) -> list[LimitReport]:
    tol = pol.report_tol
    bins = _binomial_cases()
    b_limit_bins = [c for c in bins if _integral(c[1]) or _integral(c[0] - c[1])]
    # p must sit well below the smallest theta argument, so keep x and k moderate
    ell_bins = [(x, k, a, b, q) for (x, a, b, q) in POINTS for k in (0, 1, 2)]
    reports = [
        check_limit("ell_to_abq_number", "elliptic number as p -> 0",
                    lambda c, t: elliptic_number(c[0], c[1], c[2], c[3], t, pol),
                    lambda c: abq_number(*c), POINTS, P_STEPS, tol),
        check_limit("ell_to_abq_weight", "elliptic weight as p -> 0",
                    lambda c, t: elliptic_weight(c[0], c[1], c[2], c[3], t, pol),
                    lambda c: abq_weight(*c), POINTS, P_STEPS, tol),
        check_limit("ell_to_abq_binomial", "elliptic binomial as p -> 0",
                    lambda c, t: elliptic_binomial(*c, t, pol),
                    lambda c: abq_binomial(*c, pol=pol), ell_bins, P_STEPS, tol),
        check_exact("ell_number_at_p0", "elliptic number at p = 0 is the a,b;q-number",
                    lambda c: elliptic_number(*c, 0.0, pol), lambda c: abq_number(*c),
                    POINTS, tol),
        check_exact("ell_weight_at_p0", "elliptic weight at p = 0 is the a,b;q-weight",
                    lambda c: elliptic_weight(*c, 0.0, pol), lambda c: abq_weight(*c),
                    POINTS, tol),
        check_limit("abq_to_aq_b0", "a,b;q-number as b -> 0",
                    lambda c, t: abq_number(c[0], c[1], t, c[3]),
                    lambda c: aq_number(c[0], c[1], c[3]), POINTS, PARAM_STEPS, tol),
        check_limit("abq_to_aq_binf", "a,b;q-number as b -> infinity",
                    lambda c, t: abq_number(c[0], c[1], 1 / t, c[3]),
                    lambda c: aq_number(c[0], c[1], c[3]), POINTS, PARAM_STEPS, tol),
        check_limit("abq_to_bq_a0", "a,b;q-number as a -> 0",
                    lambda c, t: abq_number(c[0], t, c[2], c[3]),
                    lambda c: bq_number(c[0], c[2], c[3]), POINTS, PARAM_STEPS, tol),
        check_limit("abq_binomial_to_aq_b0", "a,b;q-binomial as b -> 0",
                    lambda c, t: abq_binomial(c[0], c[1], c[2], t, c[4], pol=pol),
                    lambda c: aq_binomial(c[0], c[1], c[2], c[4], pol=pol),
                    b_limit_bins, PARAM_STEPS, tol),
        check_limit("abq_binomial_to_aq_binf", "a,b;q-binomial as b -> infinity",
                    lambda c, t: abq_binomial(c[0], c[1], c[2], 1 / t, c[4], pol=pol),
                    lambda c: aq_binomial(c[0], c[1], c[2], c[4], pol=pol),
                    b_limit_bins, INF_STEPS, tol),
        check_limit("abq_binomial_to_bq_a0", "a,b;q-binomial as a -> 0",
                    lambda c, t: abq_binomial(c[0], c[1], t, c[3], c[4], pol=pol),
                    lambda c: bq_binomial(c[0], c[1], c[3], c[4], pol=pol),
                    bins, PARAM_STEPS, tol),
        check_limit("aq_to_quantum", "a;q-number as a -> -1 gives the quantum number",
                    lambda c, t: aq_number(c[0], -1 + t, c[3]),
                    lambda c: quantum_number(c[0], c[3]), POINTS, PARAM_STEPS, tol),
        check_exact("bq_at_b0", "[x]_(0;q) = [x]_q",
                    lambda c: bq_number(c[0], 0.0, c[3]),
                    lambda c: q_number(c[0], c[3]), POINTS, tol),
        check_exact("aq_at_a0", "[x]_{0;q} = [x]_{1/q}",
                    lambda c: aq_number(c[0], 0.0, c[3]),
                    lambda c: q_number(c[0], 1 / c[3]), POINTS, tol),
        check_exact("aq_binomial_at_a0", "a;q-binomial at a = 0 is q^{k(k-x)} times the q-binomial",
                    lambda c: aq_binomial(c[0], c[1], 0.0, c[4], pol=pol),
                    lambda c: c[4] ** (c[1] * (c[1] - c[0])) * q_binomial(c[0], c[1], c[4], pol=pol),
                    bins, tol),
        check_exact("bq_binomial_at_b0", "(0;q)-binomial is the q-binomial",
                    lambda c: bq_binomial(c[0], c[1], 0.0, c[4], pol=pol),
                    lambda c: q_binomial(c[0], c[1], c[4], pol=pol), bins, tol),
        check_exact("k1_aq", "k = 1 a;q-binomial is the a;q-number",
                    lambda c: aq_binomial(c[0], 1, c[1], c[3], pol=pol),
                    lambda c: aq_number(c[0], c[1], c[3]), POINTS, tol),
        check_exact("k1_bq", "k = 1 (b/q;q)-binomial is the (b;q)-number",
                    lambda c: bq_binomial(c[0], 1, c[2] / c[3], c[3], pol=pol),
                    lambda c: bq_number(c[0], c[2], c[3]), POINTS, tol),
        check_exact("k1_abq", "k = 1 a,b/q;q-binomial is the a,b;q-number",
                    lambda c: abq_binomial(c[0], 1, c[1], c[2] / c[3], c[3], pol=pol),
                    lambda c: abq_number(*c), POINTS, tol),
        check_exact("k1_ell", "k = 1 elliptic binomial with b/q is the elliptic number",
                    lambda c: elliptic_binomial(c[0], 1, c[1], c[2] / c[3], c[3], 0.05, pol),
                    lambda c: elliptic_number(*c, 0.05, pol), POINTS, tol),
    ]
    return reports

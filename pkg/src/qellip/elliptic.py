"""Elliptic numbers, weights and binomial coefficients; the theta kernel.

Every object here reduces to its ``a,b;q`` counterpart at ``p = 0`` because
``theta(x;0) = 1 - x``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._base import (
    DomainError,
    PrecisionPolicy,
    check_nonzero,
    is_mp,
    policy,
    power,
    scalarize,
)
from .theta import pp_squared, theta, theta_pochhammer, thetas

__all__ = [
    "EllipticParamSet",
    "elliptic_binomial",
    "elliptic_number",
    "elliptic_weight",
    "kernel_interval",
    "log_derivative_terms",
    "theta_kernel",
    "theta_kernel_d1_closed",
    "theta_kernel_d2",
]


@dataclass(frozen=True)
class EllipticParamSet:
    """Real ``(q, a, b, p)`` with optional scan bounds ``x, r``."""

    q: float
    a: float
    b: float
    p: float
    x: float | None = None
    r: float | None = None

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise DomainError("q must lie in (0, 1)")
        if not 0 < self.p < 1:
            raise DomainError("p must lie in (0, 1)")

    def direct_domain(self) -> bool:
        """``0 < p < q^{2r}`` and ``p q^{-x-r} < a < b < 1``."""
        if self.x is None or self.r is None:
            return False
        q, p, x, r = self.q, self.p, self.x, self.r
        return 0 < p < q ** (2 * r) and p * q ** (-x - r) < self.a < self.b < 1

    def binom_top_domain(self, k: int) -> bool:
        """``0 < p < q^2`` and ``p q^{-x-1} < a <= b q^k < 1``."""
        if self.x is None:
            return False
        q, p, x = self.q, self.p, self.x
        return 0 < p < q**2 and p * q ** (-x - 1) < self.a <= self.b * q**k < 1


def _den(values, p, pol, what):
    d = thetas(values, p, pol)
    check_nonzero(d, what)
    return d


def elliptic_number(x, a, b, q, p, pol: PrecisionPolicy | None = None):
    """``theta(q^x, aq^x, bq, aq/b; p) / theta(q, aq, bq^x, aq^x/b; p)``."""
    qx = power(q, x)
    den = _den([q, a * q, b * qx, a * qx / b], p, pol, "in the elliptic number")
    return scalarize(thetas([qx, a * qx, b * q, a * q / b], p, pol) / den)


def elliptic_weight(x, a, b, q, p, pol: PrecisionPolicy | None = None):
    """Elliptic weight of the addition formula for :func:`elliptic_number`."""
    qx = power(q, x)
    den = _den([a * q, b * qx, b * q * qx, a * qx / b, a * q * qx / b], p, pol,
               "in the elliptic weight")
    num = thetas([a * q * qx * qx, b, b * q, a / b, a * q / b], p, pol)
    return scalarize(num / den * qx)


def elliptic_binomial(x, k, a, b, q, p, pol: PrecisionPolicy | None = None):
    """Elliptic binomial coefficient for a non-negative integer ``k``."""
    top = power(q, 1 + x - k)
    num_args = [top, a * top, b * power(q, 1 + k), a * power(q, 1 - k) / b]
    den_args = [q, a * q, b * power(q, 1 + x), a * power(q, 1 + x - 2 * k) / b]
    den = 1.0
    for arg in den_args:
        den = den * theta_pochhammer(arg, q, p, k, pol)
    check_nonzero(den, "in the elliptic binomial denominator")
    num = 1.0
    for arg in num_args:
        num = num * theta_pochhammer(arg, q, p, k, pol)
    return scalarize(num / den)


# ---------------------------------------------------------------------------
# theta kernel
# ---------------------------------------------------------------------------


def kernel_interval(x, r, q, p):
    """``(delta, lam) = (p q^{-x-r}, q^{r-x})``."""
    return scalarize(p * power(q, -x - r)), scalarize(power(q, r - x))


def _check_interval(u, x, r, q, p, closed: bool):
    lo, hi = kernel_interval(x, r, q, p)
    if is_mp(u, lo, hi):
        ok = (lo <= u <= hi) if closed else (lo < u < hi)
    else:
        u_, lo_, hi_ = (np.asarray(v, dtype=float) for v in (u, lo, hi))
        ok = bool(np.all((u_ >= lo_) & (u_ <= hi_))) if closed else bool(
            np.all((u_ > lo_) & (u_ < hi_)))
    if not ok:
        raise DomainError("u outside the kernel interval")


def theta_kernel(u, x, r, q, p, pol: PrecisionPolicy | None = None):
    """``theta(u q^{x+r}, u q^{x-r}; p) / theta(u q^x; p)^2`` on ``[delta, lam]``."""
    _check_interval(u, x, r, q, p, closed=True)
    uqx = u * power(q, x)
    qr = power(q, r)
    den = theta(uqx, p, pol) ** 2
    check_nonzero(den, "theta(u q^x; p)")
    return scalarize(theta(uqx * qr, p, pol) * theta(uqx / qr, p, pol) / den)


def theta_kernel_d1_closed(u, x, r, q, p, pol: PrecisionPolicy | None = None):
    """``-q^{x-r} (p;p)^2 theta(q^r;p)^2 theta(u^2 q^{2x};p) / theta(u q^x;p)^4``.

    Defined on the open interval ``(delta, lam)``.
    """
    _check_interval(u, x, r, q, p, closed=False)
    qx = power(q, x)
    qr = power(q, r)
    uqx = u * qx
    t = theta(uqx, p, pol)
    check_nonzero(t, "theta(u q^x; p)")
    pp2 = pp_squared(p, pol)
    val = -(qx / qr) * pp2 * theta(qr, p, pol) ** 2 * theta(uqx * uqx, p, pol) / t**4
    return scalarize(val)


def theta_kernel_d2(u, x, r, q, p, pol: PrecisionPolicy | None = None):
    """Second derivative by Richardson-extrapolated central differences of
    :func:`theta_kernel_d1_closed`; the step shrinks near the endpoints."""
    pol = policy(pol)
    _check_interval(u, x, r, q, p, closed=False)
    lo, hi = kernel_interval(x, r, q, p)
    h = np.minimum(pol.richardson_step * (hi - lo), np.minimum(u - lo, hi - u) / 4)
    if is_mp(u):
        h = min(pol.richardson_step * (hi - lo), (u - lo) / 4, (hi - u) / 4)

    def central(step):
        return (theta_kernel_d1_closed(u + step, x, r, q, p, pol)
                - theta_kernel_d1_closed(u - step, x, r, q, p, pol)) / (2 * step)

    return scalarize((4 * central(h / 2) - central(h)) / 3)


def log_derivative_terms(j, u, x, q, p):
    """The ``j``-th summands in the log-derivative comparison for ``f''``.

    Returns ``(lhs1, lhs2, rhs1, rhs2)`` with ``lhs1 + lhs2`` the ``u``-derivative
    of ``log[(1 - p^j u^2 q^{2x})(1 - p^{j+1} u^{-2} q^{-2x})]`` and
    ``rhs1 + rhs2`` four times that of
    ``log[(1 - p^j u q^x)(1 - p^{j+1} u^{-1} q^{-x})]``.
    """
    qx = power(q, x)
    pj = p**j
    pj1 = pj * p
    w = u * qx
    lhs1 = -2 * pj * u * qx * qx / (1 - pj * w * w)
    lhs2 = 2 * pj1 / (u * w * w) / (1 - pj1 / (w * w))
    rhs1 = -4 * pj * qx / (1 - pj * w)
    rhs2 = 4 * pj1 / (u * w) / (1 - pj1 / w)
    return tuple(scalarize(v) for v in (lhs1, lhs2, rhs1, rhs2))

"""Continuous, q-, a;q-, (b;q)- and a,b;q-binomial coefficients.

Each q-type coefficient has two product forms.  With a non-negative integer
lower index ``k`` the finite form (``k`` factors per q-shifted factorial) is
used; any other ``k`` goes through the infinite-ratio form with real index
``x - k``.  ``form=`` forces one or the other.
"""
from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy import special

from ._base import (
    DomainError,
    PoleError,
    PrecisionPolicy,
    check_nonzero,
    is_integral,
    is_mp,
    power,
    scalarize,
)
from .theta import q_pochhammer

__all__ = [
    "abq_binomial",
    "aq_binomial",
    "bq_binomial",
    "continuous_binomial",
    "continuous_binomial_product",
    "q_binomial",
]


def _gamma_pole(z) -> bool:
    if is_mp(z):
        return z <= 0 and mpmath.isint(z)
    z = np.asarray(z, dtype=float)
    return bool(np.any((z <= 0) & (z == np.floor(z))))


def continuous_binomial(x, k):
    """``Gamma(1+x) / (Gamma(1+k) Gamma(1+x-k))`` for real ``x, k``."""
    for z in (1 + x, 1 + k, 1 + x - k):
        if _gamma_pole(z):
            raise PoleError("gamma pole in the continuous binomial coefficient")
    if is_mp(x, k):
        return mpmath.gamma(1 + x) / (mpmath.gamma(1 + k) * mpmath.gamma(1 + x - k))
    x = np.asarray(x, dtype=float)
    k = np.asarray(k, dtype=float)
    lg = special.gammaln(1 + x) - special.gammaln(1 + k) - special.gammaln(1 + x - k)
    sign = special.gammasgn(1 + x) * special.gammasgn(1 + k) * special.gammasgn(1 + x - k)
    return scalarize(sign * np.exp(lg))


def continuous_binomial_product(x: float, k: float, terms: int = 1_000_000) -> float:
    """Euler-product evaluation of the continuous binomial coefficient.

    Each factor is ``1 + k(x-k) / (j(x+j))``; the neglected tail of the log
    is ``k(x-k)/J + O(1/J^2)``, so the partial products at ``J`` and ``2J``
    are combined by one Richardson step.
    """
    if x <= -1 and float(x).is_integer():
        raise PoleError("x is a negative integer")
    j = np.arange(1, 2 * terms + 1, dtype=float)
    t = k * (x - k) / (j * (x + j))
    fac = 1.0 + t
    if np.any(fac == 0):
        return 0.0
    logs = np.where(np.abs(t) < 0.5, np.log1p(t), np.log(np.abs(fac)))
    negatives = np.count_nonzero(fac < 0)
    log_half = math.fsum(logs[:terms])
    log_full = math.fsum(logs)
    sign = -1.0 if negatives % 2 else 1.0
    return sign * math.exp(2.0 * log_full - log_half)


def _form(k, form: str) -> str:
    if form not in ("auto", "finite", "infinite"):
        raise ValueError(f"unknown form {form!r}")
    if form != "auto":
        if form == "finite" and not (is_integral(k) and np.all(np.asarray(k, dtype=float) >= 0)):
            raise DomainError("finite form needs a non-negative integer k")
        return form
    if is_integral(k) and np.all(np.asarray(k, dtype=float) >= 0):
        return "finite"
    return "infinite"


def _poch(args, q, n, pol):
    out = 1.0
    for a in args:
        out = out * q_pochhammer(a, q, n, pol)
    return out


def _ratio(num_args, den_args, q, n, pol, what):
    den = _poch(den_args, q, n, pol)
    check_nonzero(den, what)
    return _poch(num_args, q, n, pol) / den


def q_binomial(x, k, q, form: str = "auto", pol: PrecisionPolicy | None = None):
    """Gaussian binomial coefficient ``(q^{1+k};q)_{x-k} / (q;q)_{x-k}``."""
    if _form(k, form) == "finite":
        top = power(q, 1 + x - k)
        val = _ratio([top], [q], q, k, pol, "in (q;q)_k")
    else:
        val = _ratio([power(q, 1 + k)], [q], q, x - k, pol, "in (q;q)_{x-k}")
    return scalarize(val)


def aq_binomial(x, k, a, q, form: str = "auto", pol: PrecisionPolicy | None = None):
    """``a;q``-binomial coefficient (the ``b -> infinity`` limit)."""
    shift = power(q, k * (k - x))
    if _form(k, form) == "finite":
        top = power(q, 1 + x - k)
        val = _ratio([top, a * top], [q, a * q], q, k, pol, "in (q, aq;q)_k")
    else:
        qk1 = power(q, 1 + k)
        val = _ratio([qk1, a * qk1], [q, a * q], q, x - k, pol, "in (q, aq;q)_{x-k}")
    return scalarize(val * shift)


def bq_binomial(x, k, b, q, form: str = "auto", pol: PrecisionPolicy | None = None):
    """``(b;q)``-binomial coefficient (the ``a -> 0`` limit)."""
    qk1 = power(q, 1 + k)
    if _form(k, form) == "finite":
        top = power(q, 1 + x - k)
        val = _ratio([top, b * qk1], [q, b * power(q, 1 + x)], q, k, pol,
                     "in (q, b q^{1+x};q)_k")
    else:
        val = _ratio([qk1, b * qk1], [q, b * power(q, 1 + 2 * k)], q, x - k, pol,
                     "in (q, b q^{1+2k};q)_{x-k}")
    return scalarize(val)


def abq_binomial(x, k, a, b, q, form: str = "auto", pol: PrecisionPolicy | None = None):
    """``a,b;q``-binomial coefficient.

    Not symmetric under ``k -> x - k``.  ``k = 1`` with ``b -> b/q`` gives
    ``[x]_{a,b;q}``.
    """
    if (b == 0) if is_mp(b) else np.any(np.asarray(b) == 0):
        raise DomainError("b = 0 is a limit case; use bq_binomial / q_binomial")
    qk1 = power(q, 1 + k)
    qk1m = power(q, 1 - k)
    if _form(k, form) == "finite":
        top = power(q, 1 + x - k)
        num = [top, a * top, b * qk1, a * qk1m / b]
        den = [q, a * q, b * power(q, 1 + x), a * power(q, 1 + x - 2 * k) / b]
        val = _ratio(num, den, q, k, pol, "in the finite form denominator")
    else:
        num = [qk1, a * qk1, b * qk1, a * qk1m / b]
        den = [q, a * q, b * power(q, 1 + 2 * k), a * q / b]
        val = _ratio(num, den, q, x - k, pol, "in the infinite form denominator")
    return scalarize(val)

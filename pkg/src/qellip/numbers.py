"""q-numbers and their one- and two-parameter extensions.

Powers ``q**x`` are taken as ``exp(x log q)``, so the base must be positive.
All functions broadcast over numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._base import DomainError, check_nonzero, is_mp, power, scalarize

__all__ = [
    "KernelSpec",
    "ParamSet",
    "abq_number",
    "abq_number_negative",
    "abq_weight",
    "aq_number",
    "bq_number",
    "f_kernel",
    "f_kernel_d1",
    "f_kernel_d2",
    "q_number",
    "quantum_number",
    "turan_ratio",
]


def _any_zero(v) -> bool:
    return bool(v == 0) if is_mp(v) else bool(np.any(np.asarray(v) == 0))


def _positive_base(q):
    bad = (q <= 0) if is_mp(q) else np.any(np.asarray(q) <= 0)
    if bad:
        raise DomainError("base q must be positive for real exponents")


@dataclass(frozen=True)
class ParamSet:
    """Validated real parameters ``(q, a, b, p)``.

    :meth:`domains` reports which theorem hypotheses the set satisfies.
    """

    q: float
    a: float = 0.0
    b: float = 0.0
    p: float = 0.0

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise DomainError("q must lie in (0, 1)")
        if self.a < 0 or self.b < 0:
            raise DomainError("a and b must be non-negative")
        if not 0 <= self.p < 1:
            raise DomainError("p must lie in [0, 1)")

    def domains(self, k: int = 1) -> dict[str, bool]:
        q, a, b, p = self.q, self.a, self.b, self.p
        return {
            "positivity": 0 < a < b < 1,
            "aq_log_concave": 0 < a < 1,
            "bq_log_concave": 0 < b < 1,
            "binom_top": 0 < a <= b * q**k < 1,
            "elliptic": 0 < p < 1,
        }


def q_number(x, q):
    """``[x]_q = (1 - q^x) / (1 - q)``."""
    _positive_base(q)
    check_nonzero(1 - q, "1 - q")
    return scalarize((1 - power(q, x)) / (1 - q))


def quantum_number(x, q):
    """``<x>_q = (q^x - q^-x) / (q - 1/q)``."""
    _positive_base(q)
    check_nonzero(q - 1 / q, "q - 1/q")
    qx = power(q, x)
    return scalarize((qx - 1 / qx) / (q - 1 / q))


def aq_number(x, a, q):
    """``[x]_{a;q}``, the ``b -> 0`` limit of :func:`abq_number`."""
    _positive_base(q)
    den = (1 - q) * (1 - a * q)
    check_nonzero(den, "(1 - q)(1 - aq)")
    qx = power(q, x)
    return scalarize((1 - qx) * (1 - a * qx) / den * (q / qx))


def bq_number(x, b, q):
    """``[x]_{(b;q)}``, the ``a -> 0`` limit of :func:`abq_number`."""
    _positive_base(q)
    qx = power(q, x)
    den = (1 - q) * (1 - b * qx)
    check_nonzero(den, "(1 - q)(1 - b q^x)")
    return scalarize((1 - qx) * (1 - b * q) / den)


def abq_number(x, a, b, q):
    """The two-parameter extension ``[x]_{a,b;q}``.

    ``b = 0`` is rejected; use :func:`aq_number` or :func:`bq_number`.
    """
    _positive_base(q)
    if _any_zero(b):
        raise DomainError("b = 0 is a limit case; use aq_number / bq_number")
    qx = power(q, x)
    den = (1 - q) * (1 - a * q) * (1 - b * qx) * (1 - a * qx / b)
    check_nonzero(den, "in the denominator of [x]_{a,b;q}")
    num = (1 - qx) * (1 - a * qx) * (1 - b * q) * (1 - a * q / b)
    return scalarize(num / den)


def abq_weight(x, a, b, q):
    """The weight ``W_{a,b;q}(x)`` of the addition formula."""
    _positive_base(q)
    if _any_zero(b):
        raise DomainError("b = 0 is a limit case")
    qx = power(q, x)
    den = (1 - a * q) * (1 - b * qx) * (1 - b * q * qx) * (1 - a * qx / b) * (1 - a * q * qx / b)
    check_nonzero(den, "in the denominator of W_{a,b;q}(x)")
    num = (1 - a * q * qx * qx) * (1 - b) * (1 - b * q) * (1 - a / b) * (1 - a * q / b)
    return scalarize(num / den * qx)


def abq_number_negative(x, a, b, q):
    """``-W_{a,b;q}(x) [-x]_{a q^{2x}, b q^x; q}``, which equals ``[x]_{a,b;q}``."""
    qx = power(q, x)
    return scalarize(-abq_weight(x, a, b, q) * abq_number(-x, a * qx * qx, b * qx, q))


# ---------------------------------------------------------------------------
# the rational kernel and the multiplicative Turan ratio
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelSpec:
    """Fixed ``x >= r > 0`` and base ``q`` of the kernel ``f_{q,x,r}``."""

    x: float
    r: float
    q: float

    def __post_init__(self):
        if not self.x >= self.r > 0:
            raise DomainError("kernel needs x >= r > 0")
        if not 0 < self.q < 1:
            raise DomainError("q must lie in (0, 1)")

    def f(self, u):
        return f_kernel(u, self.x, self.r, self.q)

    def d1(self, u):
        return f_kernel_d1(u, self.x, self.r, self.q)

    def d2(self, u):
        return f_kernel_d2(u, self.x, self.r, self.q)


def _kernel_setup(u, x, q):
    bad = (u < 0 or u > 1) if is_mp(u) else np.any((np.asarray(u) < 0) | (np.asarray(u) > 1))
    if bad:
        raise DomainError("kernel argument u must lie in [0, 1]")
    uqx = u * power(q, x)
    check_nonzero(1 - uqx, "1 - u q^x")
    return uqx


def f_kernel(u, x, r, q):
    """``(1 - u q^{x+r})(1 - u q^{x-r}) / (1 - u q^x)^2`` on ``[0, 1]``."""
    uqx = _kernel_setup(u, x, q)
    qr = power(q, r)
    return scalarize((1 - uqx * qr) * (1 - uqx / qr) / (1 - uqx) ** 2)


def f_kernel_d1(u, x, r, q):
    uqx = _kernel_setup(u, x, q)
    qr = power(q, r)
    return scalarize(-((1 - qr) ** 2) * (1 + uqx) / (1 - uqx) ** 3 * power(q, x) / qr)


def f_kernel_d2(u, x, r, q):
    uqx = _kernel_setup(u, x, q)
    qr = power(q, r)
    qx = power(q, x)
    return scalarize(-2 * (1 - qr) ** 2 * (2 + uqx) / (1 - uqx) ** 4 * qx * qx / qr)


def turan_ratio(f, lam, a, b):
    """``f(lam) f(a) / (f(b) f(lam a / b))``.

    At most one when ``f`` is positive with negative first and second
    derivatives on an interval containing ``a <= b < lam``.
    """
    den = f(b) * f(lam * a / b)
    check_nonzero(den, "f(b) f(lam a/b)")
    return scalarize(f(lam) * f(a) / den)

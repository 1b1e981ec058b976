"""Modified Jacobi theta function, shifted factorials and the sigma function.

All infinite products ``prod_{j>=0} (1 - c r**j)`` are cut at the smallest
``N`` with ``|c| r**N / (1 - r) < product_tail_bound``; for array input the
largest ``|c|`` and ``r`` set ``N`` for the whole batch.

The sigma function is implemented for the half-periods ``(1/2, tau/2)`` with
``p = exp(2 pi i tau)`` and ``tau`` on the positive imaginary axis, restricted
to the imaginary ``z`` axis, where ``u = exp(2 pi i z)`` is real and positive.
Writing ``z = i s`` with real ``s``:

* ``sigma(i s) = i * S(s)``
* ``zeta(i s) = -i * Z(s)`` with ``Z = S'/S``
* ``wp(i s) = P(s)`` with ``P = Z'``

:func:`sigma`, :func:`zeta_w` and :func:`wp` return the real functions ``S``,
``Z`` and ``P``.  Every classical identity that is homogeneous of degree zero
in ``i`` carries over unchanged; the ``wp`` difference formula picks up one
sign, ``P(v) - P(u) = -S(u-v) S(u+v) / (S(u)^2 S(v)^2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np

from ._base import (
    DomainError,
    PoleError,
    PrecisionPolicy,
    check_nonzero,
    is_integral,
    is_mp,
    max_abs,
    policy,
    product_terms,
    scalarize,
)

__all__ = [
    "SigmaContext",
    "eta_constant",
    "q_pochhammer",
    "q_pochhammer_inf",
    "sigma",
    "theta",
    "theta_pochhammer",
    "thetas",
    "wp",
    "zeta_w",
]


def _check_base(q, name="q"):
    if is_mp(q):
        ok = 0 < q < 1
    else:
        arr = np.asarray(q, dtype=float)
        ok = bool(np.all((arr > 0) & (arr < 1)))
    if not ok:
        raise DomainError(f"{name} must lie in (0, 1)")


def _check_nome(p):
    if is_mp(p):
        ok = 0 <= p < 1
    else:
        arr = np.asarray(p, dtype=float)
        ok = bool(np.all((arr >= 0) & (arr < 1)))
    if not ok:
        raise DomainError("nome p must lie in [0, 1)")


def _one_like(*args):
    return mpmath.mpf(1) if is_mp(*args) else 1.0


def _product(c, r, pol: PrecisionPolicy, start_power: int = 0):
    """``prod_{j>=0} (1 - c r**(j + start_power))`` with geometric truncation."""
    rmax = max_abs(r)
    cmax = max_abs(c) * (rmax**start_power if start_power else 1.0)
    n = product_terms(cmax, rmax, pol.product_tail_bound, pol.max_terms)
    out = _one_like(c, r)
    rj = r**start_power if start_power else _one_like(c, r)
    for _ in range(n):
        out = out * (1 - c * rj)
        rj = rj * r
    return out


def q_pochhammer_inf(a, q, pol: PrecisionPolicy | None = None):
    """``(a;q)_inf = prod_{j>=0} (1 - a q^j)`` for ``0 < q < 1``."""
    _check_base(q)
    return scalarize(_product(a, q, policy(pol)))


def _finite_pochhammer(a, q, k):
    """``prod_{j<k} (1 - a q^j)`` for non-negative integer ``k`` (array allowed)."""
    if is_mp(a, q, k) or np.ndim(k) == 0:
        out = _one_like(a, q)
        qj = _one_like(a, q)
        for _ in range(int(k)):
            out = out * (1 - a * qj)
            qj = qj * q
        return out
    k = np.asarray(k)
    out = np.ones(np.broadcast(a, q, k).shape)
    qj = np.ones_like(out)
    for j in range(int(k.max(initial=0))):
        out = np.where(j < k, out * (1 - a * qj), out)
        qj = qj * q
    return out


def q_pochhammer(a, q, k, pol: PrecisionPolicy | None = None):
    """``(a;q)_k = (a;q)_inf / (a q^k;q)_inf`` for real ``k``.

    Non-negative integer ``k`` uses the finite product directly.  The removable
    poles at ``a = q^-n`` are not removed.
    """
    _check_base(q)
    if is_integral(k) and np.all(np.asarray(k, dtype=float) >= 0):
        return scalarize(_finite_pochhammer(a, q, k))
    pol = policy(pol)
    den = _product(a * q**k, q, pol)
    check_nonzero(den, "in the denominator of (a;q)_k")
    return scalarize(_product(a, q, pol) / den)


def theta(x, p, pol: PrecisionPolicy | None = None):
    """Modified Jacobi theta function ``theta(x;p) = (x;p)_inf (p/x;p)_inf``.

    ``theta(x;0) = 1 - x``.
    """
    check = np.asarray(x) == 0 if not is_mp(x) else x == 0
    if np.any(check):
        raise DomainError("theta(x;p) needs x != 0")
    _check_nome(p)
    if not is_mp(x, p) and np.ndim(p) == 0 and float(p) == 0.0:
        return scalarize(1.0 - np.asarray(x, dtype=float))
    pol = policy(pol)
    rmax = max_abs(p)
    n = max(
        product_terms(max_abs(x), rmax, pol.product_tail_bound, pol.max_terms),
        product_terms(max_abs(p / x), rmax, pol.product_tail_bound, pol.max_terms),
    )
    one = _one_like(x, p)
    out = one
    pj = one
    for _ in range(n):
        out = out * (1 - x * pj)
        pj = pj * p
        out = out * (1 - pj / x)
    return scalarize(out)


def thetas(args, p, pol: PrecisionPolicy | None = None):
    """``theta(x_1, ..., x_s; p)``: the product of thetas over ``args``."""
    out = 1.0
    for x in args:
        out = out * theta(x, p, pol)
    return scalarize(out)


def theta_pochhammer(a, q, p, k, pol: PrecisionPolicy | None = None):
    """Theta shifted factorial ``(a;q,p)_k = theta(a, aq, ..., aq^{k-1}; p)``."""
    if not is_integral(k) or np.any(np.asarray(k, dtype=float) < 0):
        raise DomainError("theta shifted factorial needs a non-negative integer k")
    if is_mp(a, q, p, k) or np.ndim(k) == 0:
        out = _one_like(a, q, p)
        aqj = a
        for _ in range(int(k)):
            out = out * theta(aqj, p, pol)
            aqj = aqj * q
        return scalarize(out)
    k = np.asarray(k)
    shape = np.broadcast(a, q, p, k).shape
    out = np.ones(shape)
    aqj = np.broadcast_to(a, shape).astype(float)
    for j in range(int(k.max(initial=0))):
        active = j < k
        arg = np.where(active, aqj, 0.5)
        out = np.where(active, out * theta(arg, p, pol), out)
        aqj = aqj * q
    return out


# ---------------------------------------------------------------------------
# sigma, zeta, wp
# ---------------------------------------------------------------------------


def eta_constant(p, pol: PrecisionPolicy | None = None):
    """``(pi^2/6) (1 - 24 sum_{n>=1} p^n / (1 - p^n)^2)`` for real ``p``.

    Summation stops once at least ``eta_terms`` terms are in and the next term
    is at most ``product_tail_bound`` times the partial sum.
    """
    pol = policy(pol)
    _check_nome(p)
    mp = is_mp(p)
    pi = mpmath.pi if mp else math.pi
    total = mpmath.mpf(0) if mp else 0.0
    pn = p
    n = 0
    while True:
        term = pn / (1 - pn) ** 2
        if n >= pol.eta_terms and abs(term) <= pol.product_tail_bound * abs(total):
            break
        total += term
        pn = pn * p
        n += 1
        if n > pol.max_terms:
            raise DomainError("eta series did not converge")
    return pi**2 / 6 * (1 - 24 * total)


@lru_cache(maxsize=256)
def _pp_squared(p: float, tail: float) -> float:
    return _product(p, p, PrecisionPolicy(product_tail_bound=tail)) ** 2


def pp_squared(p, pol: PrecisionPolicy | None = None):
    """``(p;p)_inf^2``, cached per scalar float nome."""
    pol = policy(pol)
    _check_nome(p)
    if is_mp(p) or np.ndim(p):
        return scalarize(_product(p, p, pol) ** 2)
    return _pp_squared(float(p), pol.product_tail_bound)


@dataclass(frozen=True)
class SigmaContext:
    """Immutable data for sigma with half-periods ``(1/2, tau/2)``."""

    p: float
    eta: float
    pp2: float
    pol: PrecisionPolicy = field(default_factory=PrecisionPolicy)

    @classmethod
    def for_nome(cls, p, pol: PrecisionPolicy | None = None) -> SigmaContext:
        pol = policy(pol)
        _check_nome(p)
        if not is_mp(p):
            p = float(p)
        pp2 = pp_squared(p, pol)
        return cls(p=p, eta=eta_constant(p, pol), pp2=pp2, pol=pol)

    @property
    def period_height(self) -> float:
        """``T`` with ``tau = i T``; the zeros of ``S`` sit at ``s = k T``."""
        if self.p == 0:
            return math.inf
        return -math.log(float(self.p)) / (2 * math.pi)

    @property
    def half_periods(self) -> tuple[complex, complex]:
        return (0.5, complex(0.0, self.period_height / 2))


def sigma(s, ctx: SigmaContext):
    """``S(s) = sigma(i s) / i`` (see the module docstring)."""
    mp = is_mp(s, ctx.p)
    pi = mpmath.pi if mp else np.pi
    ex = mpmath.exp if mp else np.exp
    u = ex(-2 * pi * s)
    val = ex(-ctx.eta * s * s + pi * s) * theta(u, ctx.p, ctx.pol) / (2 * pi * ctx.pp2)
    return scalarize(val)


def _log_abs_sigma(s, ctx):
    v = sigma(s, ctx)
    check_nonzero(v, "sigma(z) at a lattice point")
    return (mpmath.log(abs(v)) if is_mp(v) else np.log(np.abs(v))), v


def _richardson(fn, s, h):
    def central(step):
        return (fn(s + step) - fn(s - step)) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def zeta_w(s, ctx: SigmaContext):
    """``Z(s) = S'(s)/S(s)``, with ``zeta(i s) = -i Z(s)``.

    Two-level Richardson extrapolation of central differences of
    ``log|S|`` with base step ``richardson_step``.
    """
    h = ctx.pol.richardson_step
    _, mid = _log_abs_sigma(s, ctx)
    _, lo = _log_abs_sigma(s - h, ctx)
    _, hi = _log_abs_sigma(s + h, ctx)
    if np.any(np.sign(lo) != np.sign(mid)) or np.any(np.sign(hi) != np.sign(mid)):
        raise PoleError("difference stencil straddles a zero of sigma")
    return scalarize(_richardson(lambda t: _log_abs_sigma(t, ctx)[0], s, h))


def wp(s, ctx: SigmaContext):
    """``P(s) = Z'(s) = wp(i s)``, the same Richardson scheme applied to zeta."""
    h = ctx.pol.richardson_step
    return scalarize(_richardson(lambda t: zeta_w(t, ctx), s, h))

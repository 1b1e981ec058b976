"""Pointwise evaluators for every inequality and identity in the catalog.

Inequality checks return ``(lhs, rhs)`` for a claim ``lhs >= rhs``.  Identity
checks return ``(lhs, rhs, scale)`` where ``scale`` is the magnitude the
residual ``|lhs - rhs|`` is measured against.  All of them broadcast over
numpy arrays and accept ``mpmath.mpf`` scalars.
"""
from __future__ import annotations

import mpmath
import numpy as np

from .._base import is_mp, power
from ..binomials import (
    abq_binomial,
    aq_binomial,
    bq_binomial,
    continuous_binomial,
)
from ..elliptic import elliptic_binomial, elliptic_number, elliptic_weight
from ..numbers import abq_number, abq_number_negative, abq_weight, aq_number, bq_number
from ..theta import SigmaContext, sigma, theta, wp, zeta_w


def _absmax(*vals, floor=0.0):
    if is_mp(*vals):
        return max([abs(v) for v in vals] + [floor])
    out = np.abs(vals[0])
    for v in vals[1:]:
        out = np.maximum(out, np.abs(v))
    return np.maximum(out, floor)


# ---------------------------------------------------------------------------
# inequalities
# ---------------------------------------------------------------------------


def check_prop_1factor(nu, q, x, y, r, pol=None):
    def g(t):
        return 1 - nu * power(q, t)

    return g(x) * g(y), g(x + r) * g(y - r)


def check_aq_numbers(x, y, r, a, q, pol=None):
    def n(t):
        return aq_number(t, a, q)

    return n(x) * n(y), n(x + r) * n(y - r)


def check_bq_numbers(x, y, r, b, q, pol=None):
    def n(t):
        return bq_number(t, b, q)

    return n(x) * n(y), n(x + r) * n(y - r)


def check_abq_shifted(x, y, r, a, b, q, pol=None):
    q2r = power(q, 2 * r)
    qr = power(q, r)
    lhs = abq_number(x, a * q2r, b * qr, q) * abq_number(y, a, b, q)
    rhs = abq_number(x + r, a, b, q) * abq_number(y - r, a * q2r, b * qr, q)
    return lhs, rhs


def check_abq_direct(x, y, r, a, b, q, pol=None):
    def n(t):
        return abq_number(t, a, b, q)

    return n(x) * n(y), n(x + r) * n(y - r)


def check_cont_binomial(x, y, k, l, r, pol=None):
    lhs = continuous_binomial(x, k) * continuous_binomial(y, l)
    rhs = continuous_binomial(x, k + r) * continuous_binomial(y, l - r)
    return lhs, rhs


def check_aq_binomial_lower(x, y, k, l, r, a, q, pol=None):
    def c(top, low):
        return aq_binomial(top, low, a, q, pol=pol)

    return c(x, k) * c(y, l), c(x, k + r) * c(y, l - r)


def check_bq_binomial_lower(x, y, k, l, r, b, q, pol=None):
    """Lower-index shape for ``(b;q)``-binomials; only used as a negative control."""

    def c(top, low):
        return bq_binomial(top, low, b, q, pol=pol)

    return c(x, k) * c(y, l), c(x, k + r) * c(y, l - r)


def check_abq_binomial_upper(y, n, k, a, b, q, pol=None):
    """Upper-index discrete strong log-concavity with ``x = y + n``."""
    x = y + n

    def c(top):
        return abq_binomial(top, k, a, b, q, pol=pol)

    return c(x) * c(y), c(x + 1) * c(y - 1)


def check_ell_shifted(x, y, r, a, b, q, p, pol=None):
    q2r = power(q, 2 * r)
    qr = power(q, r)
    lhs = elliptic_number(x, a * q2r, b * qr, q, p, pol) * elliptic_number(y, a, b, q, p, pol)
    rhs = elliptic_number(x + r, a, b, q, p, pol) * elliptic_number(y - r, a * q2r, b * qr, q, p, pol)
    return lhs, rhs


def check_ell_direct(x, y, r, a, b, q, p, pol=None):
    def n(t):
        return elliptic_number(t, a, b, q, p, pol)

    return n(x) * n(y), n(x + r) * n(y - r)


def check_ell_binomial_upper(y, n, k, a, b, q, p, pol=None):
    x = y + n

    def c(top):
        return elliptic_binomial(top, k, a, b, q, p, pol)

    return c(x) * c(y), c(x + 1) * c(y - 1)


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


def id_theta_inversion(x, p, pol=None):
    t = theta(x, p, pol)
    return t, -x * theta(1 / x, p, pol), _absmax(t, floor=1.0)


def id_theta_quasiperiod(x, p, pol=None):
    t = theta(x, p, pol)
    return theta(p * x, p, pol), -t / x, _absmax(t, floor=1.0)


def id_theta_addition(x, y, u, t, p, pol=None):
    def th(*args):
        out = 1.0
        for v in args:
            out = out * theta(v, p, pol)
        return out

    t1 = th(x * y, x / y, u * t, u / t)
    t2 = th(x * t, x / t, u * y, u / y)
    t3 = u / y * th(y * t, y / t, x * u, x / u)
    return t1 - t2, t3, _absmax(t1, t2, t3)


def id_abq_addition(x, y, a, b, q, pol=None):
    qx = power(q, x)
    nx = abq_number(x, a, b, q)
    tail = abq_weight(x, a, b, q) * abq_number(y - x, a * qx * qx, b * qx, q)
    ny = abq_number(y, a, b, q)
    return nx + tail, ny, _absmax(nx, tail, ny)


def id_ell_addition(x, y, a, b, q, p, pol=None):
    qx = power(q, x)
    nx = elliptic_number(x, a, b, q, p, pol)
    tail = elliptic_weight(x, a, b, q, p, pol) * elliptic_number(y - x, a * qx * qx, b * qx, q, p, pol)
    ny = elliptic_number(y, a, b, q, p, pol)
    return nx + tail, ny, _absmax(nx, tail, ny)


def id_abq_negative(x, a, b, q, pol=None):
    direct = abq_number(x, a, b, q)
    other = abq_number_negative(x, a, b, q)
    return direct, other, _absmax(direct, other)


def id_bq_difference(x, y, r, b, q, pol=None):
    """Closed form of ``[x][y] - [x+r][y-r]`` for the ``(b;q)``-numbers."""
    def n(t):
        return bq_number(t, b, q)

    diff = n(x) * n(y) - n(x + r) * n(y - r)
    qr = power(q, r)
    closed = ((1 - qr) * (1 - power(q, x - y + r)) * (1 - b) * (1 - b * q) ** 2
              * (1 - b * power(q, x + y))
              / ((1 - q) ** 2 * (1 - b * power(q, x)) * (1 - b * power(q, x + r))
                 * (1 - b * power(q, y)) * (1 - b * power(q, y - r)))
              * power(q, y - r))
    return diff, closed, _absmax(n(x) * n(y), n(x + r) * n(y - r))


def id_abq_binomial_dual(x, k, a, b, q, pol=None):
    fin = abq_binomial(x, k, a, b, q, form="finite", pol=pol)
    inf = abq_binomial(x, k, a, b, q, form="infinite", pol=pol)
    return fin, inf, _absmax(fin, inf, floor=1.0)


def id_k1_aq(x, a, q, pol=None):
    c = aq_binomial(x, 1, a, q, pol=pol)
    n = aq_number(x, a, q)
    return c, n, _absmax(c, n, floor=1.0)


def id_k1_bq(x, b, q, pol=None):
    c = bq_binomial(x, 1, b / q, q, pol=pol)
    n = bq_number(x, b, q)
    return c, n, _absmax(c, n, floor=1.0)


def id_k1_abq(x, a, b, q, pol=None):
    c = abq_binomial(x, 1, a, b / q, q, pol=pol)
    n = abq_number(x, a, b, q)
    return c, n, _absmax(c, n, floor=1.0)


def id_k1_ell(x, a, b, q, p, pol=None):
    c = elliptic_binomial(x, 1, a, b / q, q, p, pol)
    n = elliptic_number(x, a, b, q, p, pol)
    return c, n, _absmax(c, n, floor=1.0)


def id_aq_symmetry(x, k, a, q, pol=None):
    c1 = aq_binomial(x, k, a, q, pol=pol)
    c2 = aq_binomial(x, x - k, a, q, pol=pol)
    return c1, c2, _absmax(c1, c2, floor=1.0)


def id_bq_symmetry(x, k, b, q, pol=None):
    """Symmetry ``k <-> x - k`` fails for ``(b;q)``-binomials; a negative control."""
    c1 = bq_binomial(x, k, b, q, pol=pol)
    c2 = bq_binomial(x, x - k, b, q, pol=pol)
    return c1, c2, _absmax(c1, c2, floor=1.0)


# sigma-based identities take arguments in units of the lattice height T, so
# that s = frac * T, and group points by nome.


def _by_nome(p, fn, pol):
    if is_mp(p) or np.ndim(p) == 0:
        return fn(SigmaContext.for_nome(p, pol), p)
    p = np.asarray(p, dtype=float)
    results = None
    for value in np.unique(p):
        sel = p == value
        parts = fn(SigmaContext.for_nome(float(value), pol), sel)
        if results is None:
            results = [np.empty(p.shape) for _ in parts]
        for out, part in zip(results, parts):
            out[sel] = part
    return tuple(results)


def _scaled(ctx, sel, *fracs):
    if is_mp(ctx.p):
        height = -mpmath.log(ctx.p) / (2 * mpmath.pi)
    else:
        height = ctx.period_height
    if isinstance(sel, np.ndarray):
        return [np.asarray(f)[sel] * height for f in fracs]
    return [f * height for f in fracs]


def id_sigma_addition(x, y, u, t, p, pol=None):
    def go(ctx, sel):
        x_, y_, u_, t_ = _scaled(ctx, sel, x, y, u, t)

        def s(v):
            return sigma(v, ctx)

        t1 = s(x_ + y_) * s(x_ - y_) * s(u_ + t_) * s(u_ - t_)
        t2 = s(x_ + t_) * s(x_ - t_) * s(u_ + y_) * s(u_ - y_)
        t3 = s(y_ + t_) * s(y_ - t_) * s(x_ + u_) * s(x_ - u_)
        return t1 - t2, t3, _absmax(t1, t2, t3)

    return _by_nome(p, go, pol)


def id_zeta_difference(x, y, t, p, pol=None):
    def go(ctx, sel):
        x_, y_, t_ = _scaled(ctx, sel, x, y, t)

        def z(v):
            return zeta_w(v, ctx)

        def s(v):
            return sigma(v, ctx)

        zs = (z(x_ + y_), z(x_ - y_), z(x_ + t_), z(x_ - t_))
        lhs = zs[0] + zs[1] - zs[2] - zs[3]
        rhs = (s(2 * x_) * s(y_ + t_) * s(y_ - t_)
               / (s(x_ + y_) * s(x_ - y_) * s(x_ + t_) * s(x_ - t_)))
        return lhs, rhs, _absmax(*zs, rhs)

    return _by_nome(p, go, pol)


def id_sigma_derivative2(u, v, p, pol=None):
    def go(ctx, sel):
        u_, v_ = _scaled(ctx, sel, u, v)

        def z(w):
            return zeta_w(w, ctx)

        def s(w):
            return sigma(w, ctx)

        zs = (z(2 * u_), z(2 * v_), 2 * z(u_ + v_))
        lhs = zs[0] + zs[1] - zs[2]
        rhs = s(2 * u_ + 2 * v_) * s(u_ - v_) ** 2 / (s(2 * u_) * s(2 * v_) * s(u_ + v_) ** 2)
        return lhs, rhs, _absmax(*zs, rhs)

    return _by_nome(p, go, pol)


def id_wp_relation(u, v, p, pol=None):
    """``P(v) - P(u) = -S(u-v) S(u+v) / (S(u)^2 S(v)^2)`` on the imaginary axis."""

    def go(ctx, sel):
        u_, v_ = _scaled(ctx, sel, u, v)
        pu, pv = wp(u_, ctx), wp(v_, ctx)
        rhs = -sigma(u_ - v_, ctx) * sigma(u_ + v_, ctx) / (sigma(u_, ctx) ** 2 * sigma(v_, ctx) ** 2)
        return pv - pu, rhs, _absmax(pu, pv, rhs)

    return _by_nome(p, go, pol)


__all__ = [name for name in dir() if name.startswith(("check_", "id_"))]

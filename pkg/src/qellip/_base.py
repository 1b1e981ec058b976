"""Shared error types, precision policy and small numeric helpers.

Every evaluator in the package is written against plain arithmetic operators
so that the same code path accepts Python floats, numpy arrays and
``mpmath.mpf`` scalars.  The verifier relies on this to re-evaluate suspicious
points at higher working precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import mpmath
import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain on which a function is defined."""


class PoleError(ZeroDivisionError):
    """A denominator factor vanishes."""


@dataclass(frozen=True)
class PrecisionPolicy:
    """Truncation orders and tolerances for products, series and differences.

    ``product_tail_bound`` is the target relative error per infinite product,
    ``eta_terms`` the minimum number of terms summed for the sigma constant,
    ``fd_step`` the plain central-difference step and ``richardson_step`` the
    base step of the two-level Richardson scheme used for zeta and wp.
    """

    product_tail_bound: float = 1e-15
    eta_terms: int = 8
    fd_step: float = 1e-5
    report_tol: float = 1e-10
    richardson_step: float = 1e-4
    max_terms: int = 100_000

    def __post_init__(self):
        for name in ("product_tail_bound", "fd_step", "report_tol", "richardson_step"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.eta_terms < 1:
            raise ValueError("eta_terms must be at least 1")
        if not self.product_tail_bound < self.report_tol:
            raise ValueError("product_tail_bound must be below report_tol")

    def with_(self, **changes) -> PrecisionPolicy:
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {
            "product_tail_bound": self.product_tail_bound,
            "eta_terms": self.eta_terms,
            "fd_step": self.fd_step,
            "report_tol": self.report_tol,
            "richardson_step": self.richardson_step,
        }


DEFAULT_POLICY = PrecisionPolicy()

# Used together with mpmath.workdps(HIGH_DPS) when re-checking scan points.
HIGH_DPS = 40
HIGH_POLICY = PrecisionPolicy(product_tail_bound=1e-36, report_tol=1e-30)


def policy(pol: PrecisionPolicy | None) -> PrecisionPolicy:
    return DEFAULT_POLICY if pol is None else pol


def is_mp(*values) -> bool:
    return any(isinstance(v, (mpmath.mpf, mpmath.mpc)) for v in values)


def power(base, expo):
    """``base**expo`` for a positive base, written as exp(expo*log(base))."""
    if is_mp(base, expo):
        return mpmath.power(base, expo)
    out = np.power(np.asarray(base, dtype=float), np.asarray(expo, dtype=float))
    return out if np.ndim(out) else float(out)


def scalarize(v):
    """Return numpy 0-d results as Python floats; leave arrays and mpf alone."""
    if isinstance(v, np.ndarray) and v.ndim == 0:
        return float(v)
    if isinstance(v, np.generic):
        return float(v)
    return v


def check_nonzero(value, what: str):
    """Raise :class:`PoleError` if ``value`` (or any entry of it) is exactly 0."""
    if is_mp(value):
        if value == 0:
            raise PoleError(f"vanishing factor {what}")
        return
    if np.any(np.asarray(value) == 0):
        raise PoleError(f"vanishing factor {what}")


def is_integral(k) -> bool:
    if is_mp(k):
        return mpmath.isint(k)
    arr = np.asarray(k, dtype=float)
    return bool(np.all(np.isfinite(arr)) and np.all(arr == np.floor(arr)))


def max_abs(v) -> float:
    if is_mp(v):
        return float(abs(v))
    return float(np.max(np.abs(np.asarray(v, dtype=float)))) if np.size(v) else 0.0


def product_terms(c_max: float, ratio: float, tail: float, cap: int) -> int:
    """Smallest N with ``c_max * ratio**N / (1 - ratio) < tail``.

    This bounds the neglected part of ``log prod_{j>=N} (1 - c ratio**j)``.
    """
    if ratio <= 0.0 or c_max == 0.0:
        return 1
    if ratio >= 1.0:
        raise DomainError("product ratio must lie in [0, 1)")
    target = tail * (1.0 - ratio) / c_max
    if target >= 1.0:
        return 1
    n = math.ceil(math.log(target) / math.log(ratio))
    # float rounding can leave the bound equal to the target
    while c_max * ratio**n / (1.0 - ratio) >= tail:
        n += 1
    if n > cap:
        raise DomainError(f"product needs {n} terms, more than the cap of {cap}")
    return max(n, 1)

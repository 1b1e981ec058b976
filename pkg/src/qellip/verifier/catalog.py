"""The fixed catalog of scannable properties.

Each entry pairs a pointwise evaluator from :mod:`qellip.verifier.checks`
with a default sampling domain.  Theorem domains follow the stated
hypotheses, with two restrictions found necessary by scanning:

* the continuous binomial inequality needs ``x - k - r > -1`` (otherwise a
  gamma factor changes sign);
* the lower-index ``a;q``-binomial inequality needs the same bound;
* the upper-index ``a,b;q``-binomial inequality needs ``y >= k`` (otherwise
  coefficients can be negative);
* the shifted elliptic inequality needs every theta argument used in its
  proof to exceed ``p``, which comes down to ``p < a q^{2y+1}`` and
  ``p < a q^{x+y+r}``.  Positivity of the four elliptic numbers alone is not
  enough because the elliptic weight can be negative.

The literal domains are kept as negative controls.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from . import checks
from .domain import Choice, Interval

UNIT_OPEN = Interval(0.0, 1.0, lo_open=True, hi_open=True)
UNIT_HALF = Interval(0.0, 1.0, hi_open=True)
EXPONENT = Interval(0.0, 4.0)
NOME = Interval(0.0, 0.5, lo_open=True)

IDENTITY_TOL = 1e-10
SIGMA_TOL = 1e-6


@dataclass(frozen=True)
class Property:
    id: str
    fn: Callable
    variables: dict
    constraints: tuple = ()
    kind: str = "inequality"
    tolerance: float | None = None
    expect_violation: bool = False
    description: str = ""
    grid_points: int = 4
    random_points: int = 10_000
    quick_points: int = 1000
    tags: tuple = field(default_factory=tuple)

    @property
    def names(self) -> tuple:
        return tuple(self.variables)

    @property
    def integer_vars(self) -> tuple:
        return tuple(n for n, v in self.variables.items()
                     if isinstance(v, Interval) and v.integer)


def _ineq(id_, fn, variables, constraints, description, **kw):
    return Property(id_, fn, variables, tuple(constraints), "inequality",
                    description=description, **kw)


def _ident(id_, fn, variables, constraints, description, tol=IDENTITY_TOL, **kw):
    kw.setdefault("random_points", 1000)
    kw.setdefault("quick_points", 300)
    return Property(id_, fn, variables, tuple(constraints), "identity", tolerance=tol,
                    description=description, **kw)


_XYR = {"x": EXPONENT, "y": EXPONENT, "r": EXPONENT}
_ORDER = "x >= y >= r >= 0"
_LOWER = {"x": Interval(0.0, 6.0), "y": Interval(0.0, 6.0), "k": EXPONENT,
          "l": EXPONENT, "r": Interval(0.0, 2.0)}
_LOWER_ORDER = ("x >= y", "k >= l >= r >= 0", "y - l >= x - k")

THEOREMS = [
    _ineq("check_prop_1factor", checks.check_prop_1factor,
          {"nu": UNIT_HALF, "q": UNIT_OPEN, **_XYR}, [_ORDER],
          "(1 - nu q^t) is strongly log-concave for 0 <= nu < 1"),
    _ineq("check_aq_numbers", checks.check_aq_numbers,
          {**_XYR, "a": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER],
          "a;q-numbers are strongly log-concave"),
    _ineq("check_bq_numbers", checks.check_bq_numbers,
          {**_XYR, "b": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER],
          "(b;q)-numbers are strongly log-concave"),
    _ineq("check_abq_shifted", checks.check_abq_shifted,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER, "a < b"],
          "shifted log-concavity of a,b;q-numbers"),
    _ineq("check_abq_direct", checks.check_abq_direct,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER, "a < b"],
          "a,b;q-numbers are strongly log-concave"),
    _ineq("check_cont_binomial", checks.check_cont_binomial,
          dict(_LOWER), [*_LOWER_ORDER, "x - k - r > -1"],
          "continuous binomial coefficients, lower-index log-concavity"),
    _ineq("check_aq_binomial_lower", checks.check_aq_binomial_lower,
          {**_LOWER, "a": UNIT_HALF, "q": Interval(0.05, 0.9)}, [*_LOWER_ORDER, "x - k - r > -1"],
          "a;q-binomial coefficients, lower-index log-concavity (a = 0 allowed)"),
    _ineq("check_abq_binomial_upper", checks.check_abq_binomial_upper,
          {"y": Interval(1.0, 5.0), "n": Interval(0, 3, integer=True),
           "k": Interval(0, 3, integer=True), "a": UNIT_OPEN, "b": UNIT_OPEN,
           "q": Interval(0.05, 0.95)},
          ["0 < a <= b*q**k < 1", "y >= k"],
          "a,b;q-binomial coefficients, upper-index discrete log-concavity"),
    _ineq("check_ell_shifted", checks.check_ell_shifted,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN, "p": NOME},
          [_ORDER, "a < b", "p < a*q**(2*y+1)", "p < a*q**(x+y+r)"],
          "shifted log-concavity of elliptic numbers"),
    _ineq("check_ell_direct", checks.check_ell_direct,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN, "p": NOME},
          [_ORDER, "p < q**(2*r)", "p*q**(-x-r) < a < b < 1"],
          "elliptic numbers are strongly log-concave"),
    _ineq("check_ell_binomial_upper", checks.check_ell_binomial_upper,
          {"y": Interval(1.0, 5.0), "n": Interval(0, 3, integer=True),
           "k": Interval(0, 3, integer=True), "a": UNIT_OPEN, "b": UNIT_OPEN,
           "q": Interval(0.05, 0.95), "p": NOME},
          ["p < q**2", "p*q**(-y-n-1) < a <= b*q**k < 1", "y >= k"],
          "elliptic binomial coefficients, upper-index discrete log-concavity"),
]

# sigma arguments are fractions of the lattice height, kept off the zeros
_FRAC = Interval(0.05, 0.45)
# a handful of nomes so that the per-nome constants are shared
_SIGMA_NOME = Choice((0.01, 0.03, 0.07, 0.12, 0.2, 0.3))
_POS = Interval(0.2, 5.0, log=True)

IDENTITIES = [
    _ident("id_theta_inversion", checks.id_theta_inversion,
           {"x": Interval(0.05, 20.0, log=True), "p": Interval(0.0, 0.8)}, [],
           "theta(1/x) = -theta(x)/x"),
    _ident("id_theta_quasiperiod", checks.id_theta_quasiperiod,
           {"x": Interval(0.05, 20.0, log=True), "p": Interval(0.0, 0.8)}, [],
           "theta(px) = -theta(x)/x"),
    _ident("id_theta_addition", checks.id_theta_addition,
           {"x": _POS, "y": _POS, "u": _POS, "t": _POS, "p": Interval(0.0, 0.8)}, [],
           "Weierstrass three-term theta addition formula"),
    _ident("id_sigma_addition", checks.id_sigma_addition,
           {"x": Interval(0.3, 0.45), "y": Interval(0.02, 0.25), "u": Interval(0.3, 0.45),
            "t": Interval(0.02, 0.25), "p": _SIGMA_NOME}, [],
           "three-term sigma addition formula", tol=SIGMA_TOL),
    _ident("id_zeta_difference", checks.id_zeta_difference,
           {"x": Interval(0.3, 0.45), "y": Interval(0.02, 0.25), "t": Interval(0.02, 0.25),
            "p": _SIGMA_NOME}, [],
           "zeta difference written as a sigma quotient", tol=SIGMA_TOL),
    _ident("id_sigma_derivative2", checks.id_sigma_derivative2,
           {"u": _FRAC, "v": _FRAC, "p": _SIGMA_NOME}, [],
           "zeta(2u) + zeta(2v) - 2 zeta(u+v) as a sigma quotient", tol=SIGMA_TOL),
    _ident("id_wp_relation", checks.id_wp_relation,
           {"u": _FRAC, "v": _FRAC, "p": _SIGMA_NOME}, [],
           "wp(v) - wp(u) as a sigma quotient", tol=SIGMA_TOL),
    _ident("id_abq_addition", checks.id_abq_addition,
           {"x": Interval(0.0, 5.0), "y": Interval(0.0, 5.0), "a": UNIT_OPEN,
            "b": UNIT_OPEN, "q": UNIT_OPEN}, ["a < b"],
           "a,b;q addition formula", random_points=10_000),
    _ident("id_ell_addition", checks.id_ell_addition,
           {"x": Interval(0.0, 5.0), "y": Interval(0.0, 5.0), "a": UNIT_OPEN,
            "b": UNIT_OPEN, "q": Interval(0.05, 0.95), "p": NOME}, ["a < b"],
           "elliptic addition formula", random_points=10_000),
    _ident("id_abq_negative", checks.id_abq_negative,
           {"x": Interval(-4.0, 4.0), "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN},
           ["a < b"], "negative-argument relation"),
    _ident("id_bq_difference", checks.id_bq_difference,
           {**_XYR, "b": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER],
           "closed form of the (b;q)-number log-concavity difference"),
    _ident("id_abq_binomial_dual", checks.id_abq_binomial_dual,
           {"x": Interval(0.0, 6.0), "k": Interval(0, 4, integer=True), "a": UNIT_OPEN,
            "b": UNIT_OPEN, "q": Interval(0.05, 0.9)}, ["a < b", "x >= k"],
           "finite and infinite product forms agree"),
    _ident("id_k1_aq", checks.id_k1_aq,
           {"x": Interval(0.0, 5.0), "a": UNIT_OPEN, "q": UNIT_OPEN}, [],
           "k = 1 a;q-binomial is the a;q-number"),
    _ident("id_k1_bq", checks.id_k1_bq,
           {"x": Interval(0.0, 5.0), "b": UNIT_OPEN, "q": UNIT_OPEN}, [],
           "k = 1 (b/q;q)-binomial is the (b;q)-number"),
    _ident("id_k1_abq", checks.id_k1_abq,
           {"x": Interval(0.0, 5.0), "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN},
           ["a < b"], "k = 1 a,b/q;q-binomial is the a,b;q-number"),
    _ident("id_k1_ell", checks.id_k1_ell,
           {"x": Interval(0.0, 5.0), "a": UNIT_OPEN, "b": UNIT_OPEN,
            "q": Interval(0.05, 0.95), "p": NOME}, ["a < b"],
           "k = 1 elliptic binomial is the elliptic number"),
    _ident("id_aq_symmetry", checks.id_aq_symmetry,
           {"x": Interval(0.0, 6.0), "k": Interval(0.0, 6.0), "a": UNIT_HALF,
            "q": Interval(0.05, 0.9)}, ["x >= k"],
           "a;q-binomials are symmetric under k -> x - k"),
]

NEGATIVE_CONTROLS = [
    _ineq("neg_abq_direct_a_gt_b", checks.check_abq_direct,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN}, [_ORDER, "a > b"],
          "a,b;q log-concavity outside 0 < a < b < 1", expect_violation=True),
    _ineq("neg_bq_binomial_lower", checks.check_bq_binomial_lower,
          {"x": Interval(1.5, 4.5), "y": Interval(1.5, 4.5), "k": Interval(0.0, 1.5),
           "l": Interval(0.0, 1.0), "r": Interval(0.0, 0.5), "b": Interval(0.6, 1.0, hi_open=True),
           "q": Interval(0.1, 0.9)}, list(_LOWER_ORDER),
          "(b;q)-binomials are not lower-index log-concave", expect_violation=True),
    _ineq("neg_cont_binomial_literal", checks.check_cont_binomial,
          {"x": Interval(-0.9, 6.0), "y": Interval(-0.9, 6.0), "k": EXPONENT,
           "l": EXPONENT, "r": Interval(0.0, 2.0)}, list(_LOWER_ORDER),
          "continuous binomial inequality without x - k - r > -1", expect_violation=True),
    _ineq("neg_abq_binomial_upper_small_y", checks.check_abq_binomial_upper,
          {"y": Interval(1.0, 3.0), "n": Interval(0, 3, integer=True),
           "k": Interval(2, 4, integer=True), "a": UNIT_OPEN, "b": UNIT_OPEN,
           "q": Interval(0.05, 0.95)},
          ["0 < a <= b*q**k < 1", "y < k"],
          "upper-index a,b;q-binomial inequality with y < k", expect_violation=True),
    _ineq("neg_aq_binomial_lower_literal", checks.check_aq_binomial_lower,
          {**_LOWER, "a": UNIT_HALF, "q": Interval(0.05, 0.9)}, list(_LOWER_ORDER),
          "a;q-binomial inequality without x - k - r > -1", expect_violation=True),
    _ineq("neg_ell_shifted_literal", checks.check_ell_shifted,
          {**_XYR, "a": UNIT_OPEN, "b": UNIT_OPEN, "q": UNIT_OPEN, "p": NOME},
          [_ORDER, "a < b"],
          "shifted elliptic inequality on the literal hypotheses", expect_violation=True),
    Property("neg_bq_symmetry", checks.id_bq_symmetry,
             {"x": Interval(0.5, 6.0), "k": Interval(0.2, 3.0), "b": Interval(0.2, 0.9),
              "q": Interval(0.1, 0.9)}, ("x - k > 0.2",), "identity", tolerance=IDENTITY_TOL,
             expect_violation=True, random_points=1000, quick_points=300,
             description="(b;q)-binomials are not symmetric under k -> x - k"),
]

CATALOG = {p.id: p for p in THEOREMS + IDENTITIES + NEGATIVE_CONTROLS}

# meta entry expanded by the scanner into one report per identity
IDENTITY_SUITE = "check_identity_suite"
IDENTITY_IDS = tuple(p.id for p in IDENTITIES)


def get_property(property_id: str) -> Property:
    try:
        return CATALOG[property_id]
    except KeyError:
        known = ", ".join(sorted(CATALOG) + [IDENTITY_SUITE])
        raise KeyError(f"unknown property {property_id!r}; known: {known}") from None


def describe_catalog() -> list[dict]:
    rows = []
    for p in CATALOG.values():
        rows.append({
            "id": p.id,
            "kind": p.kind,
            "expect_violation": p.expect_violation,
            "variables": {n: v.describe() for n, v in p.variables.items()},
            "constraints": list(p.constraints),
            "description": p.description,
        })
    return rows


__all__ = ["CATALOG", "IDENTITY_IDS", "IDENTITY_SUITE", "Interval", "Property",
           "describe_catalog", "get_property"]

"""Sampling domains: per-variable ranges plus constraint expressions.

Constraints are small arithmetic/comparison expressions such as
``"0 < a < b < 1"`` or ``"p*q**(-x-r) < a"``.  They are parsed once into an
AST and evaluated element-wise on numpy arrays; only names, numbers,
arithmetic, comparisons and ``and``/``or``/``not`` are accepted.
"""
from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass
from functools import cache

import numpy as np


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False
    log: bool = False
    integer: bool = False

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.log and self.lo <= 0:
            raise ValueError("log-uniform interval needs a positive lower end")

    def grid(self, n: int) -> np.ndarray:
        if self.lo == self.hi:
            return np.array([self.lo], dtype=float)
        if self.integer:
            values = np.arange(np.ceil(self.lo), np.floor(self.hi) + 1)
            if n < len(values):
                values = np.unique(np.round(np.linspace(values[0], values[-1], n)))
            return values.astype(float)
        lo, hi = self.lo, self.hi
        if self.log:
            lo, hi = np.log(lo), np.log(hi)
        cell = (hi - lo) / (2 * max(n, 1))
        lo2 = lo + cell if self.lo_open else lo
        hi2 = hi - cell if self.hi_open else hi
        pts = np.linspace(lo2, hi2, n) if n > 1 else np.array([(lo2 + hi2) / 2])
        return np.exp(pts) if self.log else pts

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if self.lo == self.hi:
            return np.full(n, float(self.lo))
        if self.integer:
            return rng.integers(int(np.ceil(self.lo)), int(np.floor(self.hi)) + 1, n).astype(float)
        if self.log:
            return np.exp(rng.uniform(np.log(self.lo), np.log(self.hi), n))
        out = rng.uniform(self.lo, self.hi, n)
        if self.lo_open:
            out = np.where(out == self.lo, np.nextafter(self.lo, self.hi), out)
        return out

    def describe(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        tags = "".join([" log" if self.log else "", " int" if self.integer else ""])
        return f"{left}{self.lo!r}:{self.hi!r}{right}{tags}"


@dataclass(frozen=True)
class Choice:
    values: tuple[float, ...]

    def grid(self, n: int) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return np.asarray(self.values, dtype=float)[rng.integers(0, len(self.values), n)]

    def describe(self) -> str:
        return ",".join(repr(v) for v in self.values)


_RANGE = re.compile(r"^\s*([\[(]?)\s*([^:\[\]()]+?)\s*:\s*([^:\[\]()]+?)\s*([\])]?)\s*$")


def parse_range(text: str, integer: bool = False, log: bool = False):
    """Parse ``"0:4"``, ``"(0:1)"``, ``"[0:1)"``, ``"2"`` or ``"0,0.05,0.3"``."""
    text = text.strip()
    if "," in text:
        return Choice(tuple(float(v) for v in text.split(",")))
    m = _RANGE.match(text)
    if m:
        lo, hi = float(m.group(2)), float(m.group(3))
        return Interval(lo, hi, lo_open=m.group(1) == "(", hi_open=m.group(4) == ")",
                        log=log, integer=integer)
    value = float(text)
    return Interval(value, value, integer=integer)


# ---------------------------------------------------------------------------
# constraint expressions
# ---------------------------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_CMPOPS = {
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
}


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True)
class Constraint:
    text: str
    tree: ast.Expression
    names: frozenset

    def __call__(self, env: dict) -> np.ndarray:
        with np.errstate(all="ignore"):
            return np.asarray(_eval(self.tree.body, env), dtype=bool)


@cache
def compile_constraint(text: str) -> Constraint:
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ConstraintError(f"cannot parse constraint {text!r}") from exc
    names = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Name):
            names.add(node.id)
        elif not isinstance(node, (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Compare,
                                   ast.BoolOp, ast.Constant, ast.Load, ast.And, ast.Or,
                                   ast.Not, ast.USub, ast.UAdd, *_BINOPS, *_CMPOPS)):
            raise ConstraintError(f"unsupported syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, (int, float)):
            raise ConstraintError(f"only numeric constants allowed in {text!r}")
    return Constraint(text, tree, frozenset(names))


def _eval(node, env):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        try:
            return env[node.id]
        except KeyError:
            raise ConstraintError(f"unknown variable {node.id!r}") from None
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.UnaryOp):
        val = _eval(node.operand, env)
        if isinstance(node.op, ast.Not):
            return np.logical_not(val)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BoolOp):
        vals = [_eval(v, env) for v in node.values]
        fn = np.logical_and if isinstance(node.op, ast.And) else np.logical_or
        out = vals[0]
        for v in vals[1:]:
            out = fn(out, v)
        return out
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        out = True
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            out = np.logical_and(out, _CMPOPS[type(op)](left, right))
            left = right
        return out
    raise ConstraintError(f"unsupported node {type(node).__name__}")


def merge_constraints(defaults: tuple[str, ...], overrides: tuple[str, ...],
                      replace: bool = False) -> tuple[str, ...]:
    """Apply user constraints on top of the defaults.

    A user constraint displaces every default over exactly the same variables,
    so ``"a > b"`` replaces a default ``"a < b"``; ``replace=True`` drops all
    defaults.
    """
    if replace:
        return tuple(overrides)
    kept = list(defaults)
    for text in overrides:
        names = compile_constraint(text).names
        kept = [d for d in kept if compile_constraint(d).names != names]
    return tuple(kept) + tuple(overrides)

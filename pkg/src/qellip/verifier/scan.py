"""Grid plus seeded random scans of catalog properties.

Every sampled point ends in exactly one bucket: tested (pass or violation)
or skipped (constraint miss on the grid, pole, domain error or non-finite
value).  Candidate violations are re-evaluated with mpmath at ``HIGH_DPS``
digits; only confirmed ones count.
"""
from __future__ import annotations

import itertools
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import mpmath
import numpy as np

from .._base import DEFAULT_POLICY, HIGH_DPS, HIGH_POLICY, DomainError, PrecisionPolicy
from .catalog import IDENTITY_IDS, IDENTITY_SUITE, Property, get_property
from .domain import compile_constraint, merge_constraints

SKIPPABLE = (ArithmeticError, DomainError, ValueError)
MAX_SAMPLING_ROUNDS = 200


class EmptyDomainError(ValueError):
    """No sample point satisfies the effective constraints."""


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("QELLIP_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ScanSpec:
    property_id: str
    ranges: dict = field(default_factory=dict)
    constraints: tuple = ()
    replace_constraints: bool = False
    grid_points: int = 0
    random_points: int = 1000
    seed: int = 0
    slack_tol: float | None = None
    expect_violation: bool | None = None
    confirm_limit: int = 64
    chunk_size: int = 4096
    workers: int | None = None
    policy: PrecisionPolicy = DEFAULT_POLICY

    def __post_init__(self):
        if self.property_id != IDENTITY_SUITE:
            prop = get_property(self.property_id)
            unknown = set(self.ranges) - set(prop.variables)
            if unknown:
                raise ValueError(f"unknown variables for {self.property_id}: {sorted(unknown)}")
            for text in self.constraints:
                extra = compile_constraint(text).names - set(prop.variables)
                if extra:
                    raise ValueError(f"constraint {text!r} uses unknown names {sorted(extra)}")
        if not (self.grid_points >= 2 or self.random_points >= 1):
            raise ValueError("need grid_points >= 2 or random_points >= 1")
        if self.grid_points < 0 or self.random_points < 0:
            raise ValueError("point counts must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.slack_tol is not None and not self.slack_tol > 0:
            raise ValueError("slack_tol must be positive")


@dataclass
class VerificationReport:
    property_id: str
    kind: str
    points_tested: int
    violations: int
    raw_violations: int
    noise: int
    unconfirmed: int
    domain_skips: int
    rejected_samples: int
    min_slack: float | None
    argmin_point: dict | None
    max_residual: float | None
    seed: int
    grid_points: int
    random_points: int
    constraints: list
    tolerance: float
    expect_violation: bool
    passed: bool
    precision: dict
    elapsed_ms: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no NaN tokens."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def _mask(constraints, env, n):
    ok = np.ones(n, dtype=bool)
    for c in constraints:
        ok &= np.broadcast_to(c(env), (n,))
    return ok


def _grid(variables, g, constraints):
    axes = [variables[name].grid(g) for name in variables]
    pts = np.array(list(itertools.product(*axes)), dtype=float).reshape(-1, len(axes))
    env = {name: pts[:, i] for i, name in enumerate(variables)}
    ok = _mask(constraints, env, len(pts))
    return pts[ok], int(np.count_nonzero(~ok))


def _random(variables, n, constraints, rng):
    if n == 0:
        return np.empty((0, len(variables))), 0
    blocks, have, rejected = [], 0, 0
    for _ in range(MAX_SAMPLING_ROUNDS):
        batch = int(min(max(4 * (n - have), 4096), 2_000_000))
        cols = [variables[name].sample(rng, batch) for name in variables]
        env = dict(zip(variables, cols))
        ok = _mask(constraints, env, batch)
        block = np.column_stack(cols)[ok]
        rejected += batch - len(block)
        blocks.append(block)
        have += len(block)
        if have >= n:
            break
    pts = np.concatenate(blocks)[:n]
    return pts, rejected


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _kwargs(prop, row, as_mp=False):
    out = {}
    for name, value in zip(prop.names, row):
        if name in prop.integer_vars:
            out[name] = int(value)
        else:
            out[name] = mpmath.mpf(float(value)) if as_mp else float(value)
    return out


def _score(prop, result):
    """Map an evaluator result to (slack, residual); arrays or scalars."""
    if prop.kind == "identity":
        lhs, rhs, scale = result
        residual = np.abs(lhs - rhs) / scale
        return -residual, residual
    lhs, rhs = result
    norm = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)
    return (lhs - rhs) / norm, None


def _eval_block(prop, pts, pol):
    """Vectorized evaluation; a failing block is bisected down to single points."""
    n = len(pts)
    cols = {name: pts[:, i] for i, name in enumerate(prop.names)}
    try:
        with np.errstate(all="ignore"):
            s, _ = _score(prop, prop.fn(**cols, pol=pol))
        return np.broadcast_to(np.asarray(s, dtype=float), (n,)).copy()
    except SKIPPABLE:
        if n == 1:
            return np.full(1, np.nan)
    half = n // 2
    return np.concatenate([_eval_block(prop, pts[:half], pol),
                           _eval_block(prop, pts[half:], pol)])


def _eval_mp(prop, row) -> float:
    with mpmath.workdps(HIGH_DPS):
        try:
            result = prop.fn(**_kwargs(prop, row, as_mp=True), pol=HIGH_POLICY)
        except SKIPPABLE:
            return math.nan
        if prop.kind == "identity":
            lhs, rhs, scale = result
            return float(-abs(lhs - rhs) / scale)
        lhs, rhs = result
        return float((lhs - rhs) / max(abs(lhs), abs(rhs), 1))


def _point(prop, row) -> dict:
    return {name: (int(v) if name in prop.integer_vars else float(v))
            for name, v in zip(prop.names, row)}


def _finite_or_none(v):
    return float(v) if v is not None and math.isfinite(v) else None


def run_scan(spec: ScanSpec, timing: bool = False) -> VerificationReport:
    """Scan one catalog property; deterministic for a fixed spec."""
    if spec.property_id == IDENTITY_SUITE:
        raise ValueError(f"{IDENTITY_SUITE} expands to several reports; use run_identity_suite")
    start = time.perf_counter()
    prop: Property = get_property(spec.property_id)
    variables = {**prop.variables, **spec.ranges}
    texts = merge_constraints(prop.constraints, tuple(spec.constraints),
                              spec.replace_constraints)
    constraints = [compile_constraint(t) for t in texts]
    tol = spec.slack_tol if spec.slack_tol is not None else (prop.tolerance or 1e-9)
    expect = prop.expect_violation if spec.expect_violation is None else spec.expect_violation

    grid_pts, grid_miss = (_grid(variables, spec.grid_points, constraints)
                           if spec.grid_points >= 2 else (np.empty((0, len(variables))), 0))
    rng = np.random.default_rng(spec.seed)
    rand_pts, rejected = _random(variables, spec.random_points, constraints, rng)
    pts = np.concatenate([grid_pts, rand_pts]) if len(grid_pts) else rand_pts
    if len(pts) == 0:
        raise EmptyDomainError(f"no point of {spec.property_id} satisfies {list(texts)}")

    # the evaluators look up variables by the catalog order
    pts = pts[:, [list(variables).index(n) for n in prop.names]]
    chunks = [pts[i:i + spec.chunk_size] for i in range(0, len(pts), spec.chunk_size)]
    workers = spec.workers or default_workers()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda c: _eval_block(prop, c, spec.policy), chunks))
    else:
        parts = [_eval_block(prop, c, spec.policy) for c in chunks]
    slack = np.concatenate(parts)

    finite = np.isfinite(slack)
    tested = int(np.count_nonzero(finite))
    skips = grid_miss + (len(pts) - tested)
    candidates = np.flatnonzero(finite & (slack < -tol))
    confirmed = noise = 0
    for idx in candidates[:spec.confirm_limit]:
        hp = _eval_mp(prop, pts[idx])
        if math.isfinite(hp) and hp < -tol / 10:
            confirmed += 1
        else:
            noise += 1
    unconfirmed = max(len(candidates) - spec.confirm_limit, 0)

    if tested:
        masked = np.where(finite, slack, np.inf)
        i_min = int(np.argmin(masked))
        min_slack, argmin = float(slack[i_min]), _point(prop, pts[i_min])
    else:
        min_slack, argmin = None, None
    max_residual = -min_slack if prop.kind == "identity" and min_slack is not None else None

    if expect:
        passed = confirmed >= 1
    else:
        passed = confirmed == 0 and unconfirmed == 0 and tested > 0
    precision = {**spec.policy.as_dict(), "high_dps": HIGH_DPS}
    return VerificationReport(
        property_id=spec.property_id,
        kind=prop.kind,
        points_tested=tested,
        violations=confirmed,
        raw_violations=len(candidates),
        noise=noise,
        unconfirmed=unconfirmed,
        domain_skips=int(skips),
        rejected_samples=int(rejected),
        min_slack=_finite_or_none(min_slack),
        argmin_point=argmin,
        max_residual=_finite_or_none(max_residual),
        seed=spec.seed,
        grid_points=spec.grid_points,
        random_points=spec.random_points,
        constraints=list(texts),
        tolerance=tol,
        expect_violation=bool(expect),
        passed=bool(passed),
        precision=precision,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 3) if timing else None,
    )


def run_identity_suite(random_points: int | None = None, seed: int = 0, grid_points: int = 0,
                       policy: PrecisionPolicy = DEFAULT_POLICY, timing: bool = False,
                       workers: int | None = None) -> list[VerificationReport]:
    """One report per identity in the catalog, with per-identity seeds ``seed + i``."""
    reports = []
    for i, pid in enumerate(IDENTITY_IDS):
        n = get_property(pid).random_points if random_points is None else random_points
        spec = ScanSpec(pid, grid_points=grid_points, random_points=n, seed=seed + i,
                        policy=policy, workers=workers)
        reports.append(run_scan(spec, timing=timing))
    return reports

"""The default suite: every catalog property with fixed seeds, plus the
degeneration chain."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

from .._base import DEFAULT_POLICY, PrecisionPolicy
from .catalog import CATALOG
from .limits import LimitReport, run_limits
from .scan import ScanSpec, VerificationReport, dumps, run_scan

BASE_SEED = 20_240_601
QUICK_CONFIRM_LIMIT = 8

CSV_FIELDS = [
    "property_id", "kind", "points_tested", "violations", "raw_violations", "noise",
    "unconfirmed", "domain_skips", "min_slack", "max_residual", "expect_violation",
    "passed", "seed", "elapsed_ms", "argmin_point",
]


@dataclass
class SuiteResult:
    reports: list[VerificationReport]
    limits: list[LimitReport]
    quick: bool
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and all(l.passed for l in self.limits)

    def to_dict(self) -> dict:
        return {
            "quick": self.quick,
            "passed": self.passed,
            "properties": len(self.reports),
            "failed": sorted([r.property_id for r in self.reports if not r.passed]
                             + [l.id for l in self.limits if not l.passed]),
            "elapsed_ms": self.elapsed_ms,
            "reports": [r.to_dict() for r in self.reports],
            "limits": [l.to_dict() for l in self.limits],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_csv(self) -> str:
        return reports_to_csv(self.reports, self.limits)


def reports_to_csv(reports, limits=()) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = {k: getattr(r, k) for k in CSV_FIELDS if k != "argmin_point"}
        row["argmin_point"] = json.dumps(r.argmin_point, sort_keys=True)
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    for l in limits:
        writer.writerow({"property_id": l.id, "kind": "limit", "max_residual": l.extrapolated_error,
                         "passed": l.passed, "points_tested": len(l.errors),
                         "violations": 0 if l.passed else 1})
    return buf.getvalue()


def suite_specs(quick: bool = False, seed: int = BASE_SEED,
                policy: PrecisionPolicy = DEFAULT_POLICY, workers: int | None = None):
    specs = []
    for i, prop in enumerate(CATALOG.values()):
        specs.append(ScanSpec(
            prop.id,
            grid_points=0 if quick else prop.grid_points,
            random_points=prop.quick_points if quick else prop.random_points,
            seed=seed + i,
            confirm_limit=QUICK_CONFIRM_LIMIT if quick else ScanSpec.confirm_limit,
            policy=policy,
            workers=workers,
        ))
    return specs


def run_suite(quick: bool = False, seed: int = BASE_SEED, timing: bool = False,
              policy: PrecisionPolicy = DEFAULT_POLICY, workers: int | None = None,
              only: tuple[str, ...] = ()) -> SuiteResult:
    start = time.perf_counter()
    reports = [run_scan(spec, timing=timing)
               for spec in suite_specs(quick, seed, policy, workers)
               if not only or spec.property_id in only]
    limits = run_limits(policy) if not only else []
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return SuiteResult(reports, limits, quick, elapsed)

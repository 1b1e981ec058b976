"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain or
pole error during ``eval``.
"""
from __future__ import annotations

import argparse
import inspect
import json
import sys
from pathlib import Path

from . import binomials, elliptic, numbers
from ._base import DEFAULT_POLICY, DomainError, PoleError, PrecisionPolicy
from .theta import (
    SigmaContext,
    eta_constant,
    pp_squared,
    q_pochhammer,
    q_pochhammer_inf,
    sigma,
    theta,
    theta_pochhammer,
    wp,
    zeta_w,
)
from .verifier import (
    IDENTITY_SUITE,
    ScanSpec,
    dumps,
    get_property,
    parse_range,
    run_identity_suite,
    run_scan,
)
from .verifier.catalog import CATALOG, describe_catalog
from .verifier.domain import ConstraintError
from .verifier.scan import EmptyDomainError, default_workers
from .verifier.suite import reports_to_csv, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _sigma(s, p, pol=None):
    return sigma(s, SigmaContext.for_nome(p, pol))


def _zeta(s, p, pol=None):
    return zeta_w(s, SigmaContext.for_nome(p, pol))


def _wp(s, p, pol=None):
    return wp(s, SigmaContext.for_nome(p, pol))


_sigma.__doc__ = "S(s) with sigma(is) = i S(s) for nome p."
_zeta.__doc__ = "Z(s) with zeta(is) = -i Z(s) for nome p."
_wp.__doc__ = "P(s) = wp(is) for nome p."

OPERATIONS = {
    "q_number": numbers.q_number,
    "quantum_number": numbers.quantum_number,
    "aq_number": numbers.aq_number,
    "bq_number": numbers.bq_number,
    "abq_number": numbers.abq_number,
    "abq_weight": numbers.abq_weight,
    "abq_number_negative": numbers.abq_number_negative,
    "f_kernel": numbers.f_kernel,
    "f_kernel_d1": numbers.f_kernel_d1,
    "f_kernel_d2": numbers.f_kernel_d2,
    "q_pochhammer": q_pochhammer,
    "q_pochhammer_inf": q_pochhammer_inf,
    "theta": theta,
    "theta_pochhammer": theta_pochhammer,
    "eta_constant": eta_constant,
    "pp_squared": pp_squared,
    "sigma": _sigma,
    "zeta": _zeta,
    "wp": _wp,
    "continuous_binomial": binomials.continuous_binomial,
    "continuous_binomial_product": binomials.continuous_binomial_product,
    "q_binomial": binomials.q_binomial,
    "aq_binomial": binomials.aq_binomial,
    "bq_binomial": binomials.bq_binomial,
    "abq_binomial": binomials.abq_binomial,
    "elliptic_number": elliptic.elliptic_number,
    "elliptic_weight": elliptic.elliptic_weight,
    "elliptic_binomial": elliptic.elliptic_binomial,
    "theta_kernel": elliptic.theta_kernel,
    "theta_kernel_d1": elliptic.theta_kernel_d1_closed,
    "theta_kernel_d2": elliptic.theta_kernel_d2,
}

# config-file keys understood by ``scan`` (``range.<var>`` and
# ``precision.<field>`` are handled separately)
SCAN_KEYS = {"property", "grid", "random", "seed", "slack_tol", "domain", "replace_domain",
             "expect_violations", "format", "output", "threads", "confirm_limit", "timing"}
POLICY_FIELDS = set(inspect.signature(PrecisionPolicy).parameters)


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------


def _split_assignment(text: str) -> tuple[str, str]:
    if "=" not in text:
        raise UsageError(f"expected key=value, got {text!r}")
    key, value = text.split("=", 1)
    key = key.strip()
    if not key:
        raise UsageError(f"empty key in {text!r}")
    return key, value.strip()


def _scalar(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def parse_policy(assignments) -> PrecisionPolicy:
    changes = {}
    for text in assignments or ():
        key, value = _split_assignment(text)
        if key not in POLICY_FIELDS:
            raise UsageError(f"unknown precision field {key!r}; known: {sorted(POLICY_FIELDS)}")
        changes[key] = _scalar(value)
    try:
        return DEFAULT_POLICY.with_(**changes)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def read_config(path: str) -> list[tuple[str, str]]:
    """``key = value`` lines; ``#`` starts a comment; keys may repeat."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(_split_assignment(line))
    return out


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    if str(text).lower() in ("1", "true", "yes", "on"):
        return True
    if str(text).lower() in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"expected a boolean, got {text!r}")


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_eval(args) -> int:
    if args.name not in OPERATIONS:
        raise UsageError(f"unknown operation {args.name!r}; known: {', '.join(sorted(OPERATIONS))}")
    fn = OPERATIONS[args.name]
    params = inspect.signature(fn).parameters
    kwargs = {}
    for text in args.params:
        key, value = _split_assignment(text)
        if key not in params or key == "pol":
            raise UsageError(f"{args.name} has no parameter {key!r}; "
                             f"parameters: {[p for p in params if p != 'pol']}")
        kwargs[key] = _scalar(value)
    pol = parse_policy(args.precision)
    if "pol" in params:
        kwargs["pol"] = pol
    missing = [n for n, p in params.items()
               if p.default is inspect.Parameter.empty and n not in kwargs]
    if missing:
        raise UsageError(f"{args.name} needs {missing}")
    value = float(fn(**kwargs))
    if args.format == "json":
        out = {"operation": args.name, "arguments": {k: v for k, v in kwargs.items() if k != "pol"},
               "value": value, "precision": pol.as_dict()}
        _emit(dumps(out), None)
    else:
        policy_text = " ".join(f"{k}={v}" for k, v in pol.as_dict().items())
        _emit(f"{value:.15g}\npolicy: {policy_text}", None)
    return EXIT_OK


def _scan_settings(args) -> dict:
    settings = {"domain": [], "range": {}, "precision": []}
    if args.config:
        for key, value in read_config(args.config):
            if key.startswith("range."):
                settings["range"][key[6:]] = value
            elif key.startswith("precision."):
                settings["precision"].append(f"{key[10:]}={value}")
            elif key == "domain":
                settings["domain"].append(value)
            elif key in SCAN_KEYS:
                settings[key] = value
            else:
                raise UsageError(f"unknown config key {key!r}")
    flags = {
        "property": args.property, "grid": args.grid, "random": args.random, "seed": args.seed,
        "slack_tol": args.slack_tol, "format": args.format, "output": args.output,
        "threads": args.threads, "confirm_limit": args.confirm_limit,
    }
    settings.update({k: v for k, v in flags.items() if v is not None})
    for flag in ("replace_domain", "expect_violations", "timing"):
        if getattr(args, flag):
            settings[flag] = True
    settings["domain"] += args.domain or []
    for text in args.range or []:
        key, value = _split_assignment(text)
        settings["range"][key] = value
    settings["precision"] += args.precision or []
    return settings


def cmd_scan(args) -> int:
    s = _scan_settings(args)
    if "property" not in s:
        raise UsageError("scan needs --property (or property= in the config)")
    fmt = s.get("format", "json")
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    pol = parse_policy(s["precision"])
    timing = _bool(s.get("timing", False))
    threads = int(s["threads"]) if "threads" in s else default_workers()
    seed = int(s.get("seed", 0))
    grid = int(s.get("grid", 0))
    random = int(s.get("random", 1000))

    if s["property"] == IDENTITY_SUITE:
        if s["range"] or s["domain"]:
            raise UsageError(f"{IDENTITY_SUITE} takes no --range or --domain")
        reports = run_identity_suite(random if "random" in s else None, seed, grid, pol,
                                     timing, threads)
        text = (dumps([r.to_dict() for r in reports]) if fmt == "json"
                else reports_to_csv(reports))
        _emit(text, s.get("output"))
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL

    try:
        prop = get_property(s["property"])
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ranges = {}
    for var, text in s["range"].items():
        if var not in prop.variables:
            raise UsageError(f"{prop.id} has no variable {var!r}")
        base = prop.variables[var]
        try:
            ranges[var] = parse_range(text, integer=getattr(base, "integer", False),
                                      log=getattr(base, "log", False))
        except ValueError as exc:
            raise UsageError(f"bad range for {var}: {exc}") from None
    expect = True if _bool(s.get("expect_violations", False)) else None
    try:
        spec = ScanSpec(prop.id, ranges=ranges, constraints=tuple(s["domain"]),
                        replace_constraints=_bool(s.get("replace_domain", False)),
                        grid_points=grid, random_points=random, seed=seed,
                        slack_tol=float(s["slack_tol"]) if "slack_tol" in s else None,
                        expect_violation=expect,
                        confirm_limit=int(s.get("confirm_limit", ScanSpec.confirm_limit)),
                        workers=threads, policy=pol)
        report = run_scan(spec, timing=timing)
    except (ConstraintError, EmptyDomainError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = report.to_json() if fmt == "json" else reports_to_csv([report])
    _emit(text, s.get("output"))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_suite(args) -> int:
    if args.format not in ("json", "csv"):
        raise UsageError(f"unknown format {args.format!r}")
    unknown = [p for p in args.only or () if p not in CATALOG]
    if unknown:
        raise UsageError(f"unknown properties {unknown}")
    result = run_suite(quick=args.quick, seed=args.seed, timing=args.timing,
                       policy=parse_policy(args.precision), workers=args.threads,
                       only=tuple(args.only or ()))
    _emit(result.to_json() if args.format == "json" else result.to_csv(), args.output)
    if args.output:
        failed = result.to_dict()["failed"]
        status = "PASS" if result.passed else "FAIL " + ", ".join(failed)
        sys.stderr.write(f"suite: {len(result.reports)} properties, "
                         f"{len(result.limits)} limit checks: {status}\n")
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_identities(args) -> int:
    reports = run_identity_suite(args.random, args.seed, 0, parse_policy(args.precision),
                                 args.timing, args.threads)
    text = dumps([r.to_dict() for r in reports]) if args.format == "json" else reports_to_csv(reports)
    _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_list(args) -> int:
    if args.what == "operations":
        rows = [{"name": n, "parameters": [p for p in inspect.signature(f).parameters if p != "pol"],
                 "doc": next(iter((inspect.getdoc(f) or "").splitlines()), "")}
                for n, f in OPERATIONS.items()]
    else:
        rows = describe_catalog()
    _emit(json.dumps(rows, indent=2, sort_keys=True), None)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qellip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=("json", "csv")):
        p.add_argument("--precision", action="append", metavar="FIELD=VALUE",
                       help="override a PrecisionPolicy field (repeatable)")
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--timing", action="store_true",
                       help="record elapsed_ms (reports are then no longer byte-stable)")

    p = sub.add_parser("eval", help="evaluate one library operation")
    p.add_argument("name")
    p.add_argument("params", nargs="*", metavar="KEY=VALUE")
    p.add_argument("--precision", action="append", metavar="FIELD=VALUE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="scan one catalog property")
    p.add_argument("--config", help="key=value file; flags override it")
    p.add_argument("--property")
    p.add_argument("--grid", type=int, help="grid points per axis")
    p.add_argument("--random", type=int, help="number of random points")
    p.add_argument("--seed", type=int)
    p.add_argument("--range", action="append", metavar="VAR=SPEC",
                   help="e.g. x=0:4, q=(0:1), p=0,0.05,0.3 (repeatable)")
    p.add_argument("--domain", action="append", metavar="EXPR",
                   help="extra constraint; replaces defaults over the same variables")
    p.add_argument("--replace-domain", action="store_true",
                   help="drop all default constraints")
    p.add_argument("--slack-tol", type=float)
    p.add_argument("--confirm-limit", type=int)
    p.add_argument("--expect-violations", action="store_true",
                   help="negative control: succeed only if a violation is confirmed")
    p.add_argument("--output")
    p.add_argument("--threads", type=int)
    p.add_argument("--precision", action="append", metavar="FIELD=VALUE")
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("suite", help="run the full default catalog")
    p.add_argument("--quick", action="store_true", help="reduced sample counts")
    p.add_argument("--seed", type=int, default=20_240_601)
    p.add_argument("--only", nargs="+", metavar="ID")
    p.add_argument("--output")
    p.add_argument("--threads", type=int)
    common(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("identities", help="one report per identity")
    p.add_argument("--random", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.add_argument("--threads", type=int)
    common(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("list", help="list operations or catalog properties")
    p.add_argument("what", choices=("operations", "properties"))
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, PoleError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

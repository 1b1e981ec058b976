"""Sampling-based certification of the catalog's inequalities and identities."""
from .catalog import (
    CATALOG,
    IDENTITY_IDS,
    IDENTITY_SUITE,
    Property,
    describe_catalog,
    get_property,
)
from .domain import Choice, ConstraintError, Interval, compile_constraint, parse_range
from .scan import (
    EmptyDomainError,
    ScanSpec,
    VerificationReport,
    dumps,
    run_identity_suite,
    run_scan,
)

__all__ = [
    "CATALOG",
    "IDENTITY_IDS",
    "IDENTITY_SUITE",
    "Choice",
    "ConstraintError",
    "EmptyDomainError",
    "Interval",
    "Property",
    "ScanSpec",
    "VerificationReport",
    "compile_constraint",
    "describe_catalog",
    "dumps",
    "get_property",
    "parse_range",
    "run_identity_suite",
    "run_scan",
]

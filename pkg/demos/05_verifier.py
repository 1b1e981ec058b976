"""Sampling-based certification of the log-concavity theorems.

Each scan evaluates a property on a grid plus seeded random points, confirms
any candidate violation at 40 digits and reports the smallest slack. Negative
controls relax a hypothesis and must produce confirmed violations.
"""
from qellip.verifier import ScanSpec, run_scan
from qellip.verifier.limits import run_limits

for pid in ("check_abq_direct", "check_ell_direct", "check_ell_binomial_upper"):
    rep = run_scan(ScanSpec(pid, grid_points=4, random_points=5000, seed=1))
    print(f"{pid:28} tested {rep.points_tested:5}  violations {rep.violations}  "
          f"min slack {rep.min_slack:.3e}")

print()
for pid in ("neg_abq_direct_a_gt_b", "neg_ell_shifted_literal"):
    rep = run_scan(ScanSpec(pid, random_points=20_000, seed=1))
    print(f"{pid:28} confirmed violations {rep.violations}  worst at {rep.argmin_point}")

print("\ndegenerations")
for lim in run_limits():
    print(f"  {lim.id:24} error {lim.extrapolated_error:.1e}  {'ok' if lim.passed else 'FAIL'}")

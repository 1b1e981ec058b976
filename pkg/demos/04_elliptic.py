"""Elliptic numbers and binomials, and where the theta kernel turns around.

As p -> 0 everything collapses to the a,b;q case. For p > 0 the theta
kernel is decreasing only where u q^x exceeds sqrt(p); below that its
derivative changes sign.
"""
import math

from qellip import (
    abq_binomial,
    abq_number,
    elliptic_binomial,
    elliptic_number,
    elliptic_weight,
    kernel_interval,
    theta_kernel,
    theta_kernel_d1_closed,
)

x, a, b, q = 2.3, 0.3, 0.7, 0.6
print("elliptic number as p -> 0")
for p in (1e-2, 1e-4, 1e-6, 0.0):
    print(f"  p = {p:<7} {elliptic_number(x, a, b, q, p):.15f}")
print(f"  a,b;q     {abq_number(x, a, b, q):.15f}")

print(f"\nelliptic binomial (3 choose 2), p = 0.02: {elliptic_binomial(3, 2, a, b, q, 0.02):.15f}")
print(f"a,b;q binomial (3 choose 2)             : {abq_binomial(3, 2, a, b, q):.15f}")
print(f"elliptic weight W(1), p = 0.02          : {elliptic_weight(1, a, b, q, 0.02):.15f}")

x, r, q, p = 1.0, 0.5, 0.5, 0.01
lo, hi = kernel_interval(x, r, q, p)
split = math.sqrt(p) * q**-x
print(f"\ntheta kernel on [{lo:.4f}, {hi:.4f}], turning point sqrt(p) q^-x = {split:.4f}")
for u in (lo + 0.3 * (split - lo), split, 0.5 * (split + hi), hi - 0.01):
    print(f"  u = {u:.4f}: f = {theta_kernel(u, x, r, q, p):.8f}  "
          f"f' = {theta_kernel_d1_closed(u, x, r, q, p):+.6f}")

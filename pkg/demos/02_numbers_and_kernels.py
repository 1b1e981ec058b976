"""Generalized q-numbers and the rational kernel behind their log-concavity.

The a,b;q-number interpolates the a;q- and (b;q)-numbers, and its weight
makes the addition formula [x + y] = [x] + W(x) [y]' hold exactly, where
the prime shifts the parameters to a q^(2x), b q^x.
"""
from fractions import Fraction

from qellip import (
    abq_number,
    abq_weight,
    aq_number,
    bq_number,
    f_kernel,
    f_kernel_d1,
    q_number,
    turan_ratio,
)

q, a, b = 0.5, 0.25, 0.5
print(f"[3]_q           = {q_number(3, q)}  (1 + q + q^2 = {1 + q + q * q})")
print(f"[2]_(a;q)       = {aq_number(2, a, q):.15f}  (45/14 = {float(Fraction(45, 14)):.15f})")
print(f"[2]_(b;q)       = {bq_number(2, b, q):.15f}")
print(f"[2]_(a,b;q)     = {abq_number(2, a, b, q):.15f}")

x, y = 1.3, 2.2
lhs = abq_number(x + y, a, b, q)
qx = q**x
rhs = abq_number(x, a, b, q) + abq_weight(x, a, b, q) * abq_number(y, a * qx * qx, b * qx, q)
print(f"\naddition formula at x={x}, y={y}: {lhs:.15f} vs {rhs:.15f}")

print("\nkernel f(u) is positive, decreasing and concave on [0, 1]")
x, r = 2.0, 0.5
for u in (0.1, 0.5, 0.9):
    print(f"  u = {u}: f = {f_kernel(u, x, r, q):.6f}, f' = {f_kernel_d1(u, x, r, q):.6f}")
ratio = turan_ratio(lambda u: f_kernel(u, x, r, q), 0.9, 0.3, 0.6)
print(f"  f(0.9) f(0.3) / (f(0.6) f(0.45)) = {ratio:.10f} <= 1")

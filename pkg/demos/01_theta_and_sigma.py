"""The modified Jacobi theta function and the Weierstrass sigma function.

theta(x; p) is an infinite product truncated once the tail drops below the
policy bound. It is checked against its two functional equations and the
p = 0 degeneration, and then sigma is evaluated on the imaginary axis.
"""
import math

import mpmath

from qellip import HIGH_POLICY, SigmaContext, sigma, theta, wp, zeta_w

x, p = 0.37, 0.2
t = theta(x, p)
print(f"theta({x}; {p})            = {t:.15f}")
print(f"theta(1/x) + theta(x)/x    = {theta(1 / x, p) + t / x:.2e}")
print(f"theta(p x) + theta(x)/x    = {theta(p * x, p) + t / x:.2e}")
print(f"theta(x; 0) = 1 - x        : {theta(x, 0.0)} vs {1 - x}")

# the same value at 40 digits
with mpmath.workdps(40):
    print("40-digit theta             =", theta(mpmath.mpf("0.37"), mpmath.mpf("0.2"), HIGH_POLICY))

print("\nsigma on the imaginary axis, S(s) = sigma(i s) / i")
for nome in (0.0, 0.05, 0.3):
    ctx = SigmaContext.for_nome(nome)
    h = 1e-5
    slope = (sigma(h, ctx) - sigma(-h, ctx)) / (2 * h)
    print(f"  p = {nome:<5} S'(0) = {slope:.10f}  S(0.4) = {sigma(0.4, ctx):.10f}  "
          f"zeta(0.4) = {zeta_w(0.4, ctx):.8f}  wp(0.4) = {wp(0.4, ctx):.8f}")

s = 0.4
closed = math.exp(-math.pi**2 * s**2 / 6) * math.sinh(math.pi * s) / math.pi
print(f"\np = 0 closed form at s = {s}: {closed:.15f} vs {sigma(s, SigmaContext.for_nome(0.0)):.15f}")

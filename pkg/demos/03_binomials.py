"""Binomial coefficients: Gaussian, continuous, a;q, (b;q) and a,b;q.

Product forms are evaluated in both a finite and an infinite form where both
exist, and the k = 1 cases reduce to the numbers.
"""
from qellip import (
    PoleError,
    abq_binomial,
    abq_number,
    aq_binomial,
    bq_binomial,
    continuous_binomial,
    continuous_binomial_product,
    q_binomial,
)

print(f"Gaussian [4 choose 2]_(1/2)   = {q_binomial(4, 2, 0.5)}")
print(f"continuous C(2.5, 1.3)        = {continuous_binomial(2.5, 1.3):.15f}")
print(f"  via the Euler product       = {continuous_binomial_product(2.5, 1.3):.15f}")
try:
    continuous_binomial(2, 3)
except PoleError as err:
    print(f"continuous C(2, 3)            -> PoleError: {err}")

x, k, a, b, q = 4.5, 1.7, 0.3, 0.6, 0.55
print(f"\na;q-binomial                  = {aq_binomial(x, k, a, q):.15f}")
print(f"a;q symmetry k -> x - k       = {aq_binomial(x, x - k, a, q):.15f}")
print(f"(b;q)-binomial                = {bq_binomial(x, k, b, q):.15f}")
print(f"(b;q) at x - k                = {bq_binomial(x, x - k, b, q):.15f}  (not symmetric)")
print(f"a,b;q finite form             = {abq_binomial(5, 2, a, b, q, form='finite'):.15f}")
print(f"a,b;q infinite form           = {abq_binomial(5, 2, a, b, q, form='infinite'):.15f}")
print(f"k = 1 reduction               : {abq_binomial(x, 1, a, b / q, q):.15f} vs "
      f"{abq_number(x, a, b, q):.15f}")

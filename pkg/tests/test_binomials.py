from fractions import Fraction as Fr

import numpy as np
import oracles
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qellip import (
    DomainError,
    PoleError,
    abq_binomial,
    abq_number,
    aq_binomial,
    aq_number,
    bq_binomial,
    bq_number,
    continuous_binomial,
    continuous_binomial_product,
    q_binomial,
)

# Gamma(7/2) / Gamma(9/4)^2 at 50 digits
CONT_BINOMIAL_2_5 = 2.588892485704220912


class TestContinuous:
    def test_integer(self):
        assert continuous_binomial(4, 2) == pytest.approx(6.0, rel=1e-14)
        assert continuous_binomial(10, 3) == pytest.approx(120.0, rel=1e-13)

    def test_k_zero(self):
        for x in (0.3, 2.5, 7.0):
            assert continuous_binomial(x, 0) == pytest.approx(1.0, rel=1e-14)

    def test_frozen_value(self):
        assert continuous_binomial(2.5, 1.25) == pytest.approx(CONT_BINOMIAL_2_5, rel=1e-13)

    def test_euler_product_route(self):
        gamma_route = continuous_binomial(2.5, 1.25)
        assert continuous_binomial_product(2.5, 1.25) == pytest.approx(gamma_route, rel=1e-9)

    @pytest.mark.parametrize("x,k", [(3.7, 1.2), (5.0, 2.5), (0.4, 0.9)])
    def test_routes_agree(self, x, k):
        assert continuous_binomial_product(x, k) == pytest.approx(continuous_binomial(x, k), rel=1e-9)

    def test_gamma_pole(self):
        with pytest.raises(PoleError):
            continuous_binomial(-2, 0.5)

    def test_pole_in_lower_gamma(self):
        with pytest.raises(PoleError):
            continuous_binomial(2, 3)


class TestQBinomial:
    def test_gaussian_example(self):
        q = 0.5
        assert q_binomial(4, 2, q) == pytest.approx(1 + q + 2 * q**2 + q**3 + q**4, rel=1e-15)
        assert q_binomial(4, 2, q) == pytest.approx(2.1875, rel=1e-15)

    def test_k_zero(self):
        assert q_binomial(3.3, 0, 0.4) == 1.0

    @settings(max_examples=100, deadline=None)
    @given(n=st.integers(0, 10), data=st.data(), q=st.floats(0.05, 0.95))
    def test_symmetry(self, n, data, q):
        k = data.draw(st.integers(0, n))
        assert q_binomial(n, k, q) == pytest.approx(q_binomial(n, n - k, q), rel=1e-12)

    @pytest.mark.parametrize("n,k", [(5, 2), (7, 3), (6, 6), (8, 1)])
    def test_forms_agree(self, n, k):
        fin = q_binomial(n, k, 0.45, form="finite")
        assert q_binomial(n, k, 0.45, form="infinite") == pytest.approx(fin, rel=1e-12)

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            q_binomial(3, 1, 0.5, form="other")

    def test_finite_form_needs_integer(self):
        with pytest.raises(DomainError):
            q_binomial(3, 1.5, 0.5, form="finite")


class TestAqBqBinomial:
    @pytest.mark.parametrize("x", [0.5, 2.0, 3.7])
    def test_k1_reductions(self, x):
        a, b, q = 0.3, 0.6, 0.55
        assert aq_binomial(x, 1, a, q) == pytest.approx(aq_number(x, a, q), rel=1e-12)
        assert bq_binomial(x, 1, b / q, q) == pytest.approx(bq_number(x, b, q), rel=1e-12)

    def test_aq_rational(self):
        x, k, a, q = 3, 1, Fr(1, 4), Fr(1, 2)
        top = q**(1 + x - k)
        exact = q**(k * (k - x)) * oracles.poch(top, q, k) * oracles.poch(a * top, q, k) \
            / (oracles.poch(q, q, k) * oracles.poch(a * q, q, k))
        assert exact == Fr(31, 4)
        assert aq_binomial(3, 1, 0.25, 0.5) == pytest.approx(7.75, rel=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(n=st.integers(0, 8), data=st.data(), a=st.floats(0, 0.95), q=st.floats(0.05, 0.95))
    def test_aq_symmetry(self, n, data, a, q):
        k = data.draw(st.integers(0, n))
        assert aq_binomial(n, k, a, q) == pytest.approx(aq_binomial(n, n - k, a, q), rel=1e-11)

    def test_bq_asymmetry(self):
        worst = 0.0
        for n in range(2, 7):
            for k in range(n + 1):
                for b in (0.3, 0.6, 0.9):
                    lhs, rhs = bq_binomial(n, k, b, 0.5), bq_binomial(n, n - k, b, 0.5)
                    worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1))
        assert worst > 10 * 1e-10

    def test_forms_agree(self):
        for form_args in [(5, 2, 0.3, 0.4), (4, 3, 0.8, 0.7)]:
            x, k, c, q = form_args
            for fn in (aq_binomial, bq_binomial):
                fin = fn(x, k, c, q, form="finite")
                assert fn(x, k, c, q, form="infinite") == pytest.approx(fin, rel=1e-12)


class TestAbqBinomial:
    def test_k_zero(self):
        assert abq_binomial(3.4, 0, 0.2, 0.6, 0.5) == 1.0

    @pytest.mark.parametrize("x", [0.7, 2.0, 4.3])
    def test_k1_is_number(self, x):
        a, b, q = 0.2, 0.7, 0.6
        assert abq_binomial(x, 1, a, b / q, q) == pytest.approx(abq_number(x, a, b, q), rel=1e-12)

    def test_rational_example(self):
        exact = oracles.abq_binomial(4, 2, Fr(1, 4), Fr(1, 2), Fr(1, 2))
        assert abq_binomial(4, 2, 0.25, 0.5, 0.5) == pytest.approx(float(exact), rel=1e-13)

    def test_b_zero_rejected(self):
        with pytest.raises(DomainError):
            abq_binomial(3, 1, 0.2, 0.0, 0.5)

    def test_not_symmetric(self):
        assert abs(abq_binomial(5, 1, 0.2, 0.7, 0.5) - abq_binomial(5, 4, 0.2, 0.7, 0.5)) > 1e-3

    @settings(max_examples=150, deadline=None)
    @given(n=st.integers(0, 7), data=st.data(), a=st.floats(0.01, 0.9),
           b=st.floats(0.02, 0.98), q=st.floats(0.1, 0.9))
    def test_dual_forms_agree(self, n, data, a, b, q):
        assume(a < b)
        k = data.draw(st.integers(0, n))
        try:
            fin = abq_binomial(n, k, a, b, q, form="finite")
        except PoleError:
            assume(False)
        inf = abq_binomial(n, k, a, b, q, form="infinite")
        assert abs(fin - inf) <= 1e-10 * max(1, abs(fin))

    def test_real_k_uses_infinite_form(self):
        v = abq_binomial(3.5, 1.5, 0.2, 0.7, 0.5)
        assert v == abq_binomial(3.5, 1.5, 0.2, 0.7, 0.5, form="infinite")

    def test_broadcast(self):
        ks = np.array([0, 1, 2])
        out = abq_binomial(4, ks, 0.2, 0.7, 0.5)
        assert np.allclose(out, [abq_binomial(4, int(k), 0.2, 0.7, 0.5) for k in ks], rtol=1e-14)


def test_rational_oracle_points():
    for x, k, a, b, q in oracles.rational_points():
        fa, fb, fq = float(a), float(b), float(q)
        assert oracles.rel_err(abq_binomial(x, k, fa, fb, fq), oracles.abq_binomial(x, k, a, b, q)) < 1e-12
        assert oracles.rel_err(q_binomial(x, k, fq), oracles.gaussian_binomial(x, k, q)) < 1e-12

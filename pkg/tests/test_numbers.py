import math
from fractions import Fraction as Fr

import numpy as np
import oracles
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qellip import (
    DomainError,
    KernelSpec,
    ParamSet,
    PoleError,
    abq_number,
    abq_number_negative,
    abq_weight,
    aq_number,
    bq_number,
    f_kernel,
    f_kernel_d1,
    f_kernel_d2,
    q_number,
    quantum_number,
    turan_ratio,
)

unit = st.floats(0.02, 0.98)


@st.composite
def positivity_params(draw):
    q = draw(st.floats(0.05, 0.95))
    a = draw(st.floats(0.01, 0.95))
    b = draw(st.floats(0.01, 0.98))
    assume(a < b - 1e-3)
    return a, b, q


class TestQNumber:
    def test_examples(self):
        assert q_number(0, 0.5) == 0.0
        assert q_number(3, 0.5) == 1.75
        assert q_number(1, 0.3) == pytest.approx(1.0, rel=1e-15)

    def test_pole(self):
        with pytest.raises(PoleError):
            q_number(2, 1.0)

    def test_negative_base(self):
        with pytest.raises(DomainError):
            q_number(2, -0.5)


class TestQuantumNumber:
    def test_examples(self):
        assert quantum_number(1, 0.3) == pytest.approx(1.0, rel=1e-15)
        assert quantum_number(0, 0.3) == 0.0
        assert quantum_number(2, 0.5) == pytest.approx(2.5, rel=1e-15)

    def test_symmetric_in_q(self):
        assert quantum_number(2.7, 0.4) == pytest.approx(quantum_number(2.7, 2.5), rel=1e-14)


class TestAqNumber:
    def test_at_a_zero_is_inverse_base(self):
        for x in (0.5, 2.0, 3.3):
            assert aq_number(x, 0.0, 0.4) == pytest.approx(q_number(x, 1 / 0.4), rel=1e-14)

    def test_unit(self):
        assert aq_number(1, 0.37, 0.6) == pytest.approx(1.0, rel=1e-15)

    def test_rational_oracle(self):
        # (3/4)(15/16) / ((1/2)(7/8)) * q^{1-x} = 45/14
        assert aq_number(2, 0.25, 0.5) == pytest.approx(float(Fr(45, 14)), rel=1e-15)

    def test_pole(self):
        with pytest.raises(PoleError):
            aq_number(2, 2.0, 0.5)


class TestBqNumber:
    def test_at_b_zero(self):
        assert bq_number(2.3, 0.0, 0.6) == pytest.approx(q_number(2.3, 0.6), rel=1e-15)

    def test_examples(self):
        assert bq_number(1, 0.4, 0.6) == pytest.approx(1.0, rel=1e-15)
        assert bq_number(2, 0.5, 0.5) == pytest.approx(0.75 * 0.75 / (0.5 * 0.875), rel=1e-15)

    def test_pole(self):
        with pytest.raises(PoleError):
            bq_number(1, 2.0, 0.5)


class TestAbqNumber:
    def test_zero_and_one(self):
        assert abq_number(0, 0.2, 0.6, 0.5) == 0.0
        assert abq_number(1, 0.2, 0.6, 0.5) == pytest.approx(1.0, rel=1e-15)

    def test_rational_example(self):
        half, quarter = Fr(1, 2), Fr(1, 4)
        exact = oracles.abq_number(2, quarter, half, half)
        # last denominator factor is 1 - a q^2 / b = 7/8
        by_hand = (Fr(3, 4) * Fr(15, 16) * Fr(3, 4) * Fr(3, 4)
                   / (Fr(1, 2) * Fr(7, 8) * Fr(7, 8) * Fr(7, 8)))
        assert exact == by_hand
        assert abq_number(2, 0.25, 0.5, 0.5) == pytest.approx(float(exact), rel=1e-14)

    def test_b_zero_rejected(self):
        with pytest.raises(DomainError):
            abq_number(2, 0.2, 0.0, 0.5)

    def test_pole(self):
        with pytest.raises(PoleError):
            abq_number(2, 0.5, 4.0, 0.5)

    def test_broadcasts(self):
        xs = np.linspace(0, 3, 7)
        out = abq_number(xs, 0.2, 0.6, 0.5)
        assert out.shape == (7,)
        assert np.allclose(out, [abq_number(float(x), 0.2, 0.6, 0.5) for x in xs], rtol=1e-15)


class TestWeight:
    def test_zero(self):
        assert abq_weight(0, 0.3, 0.7, 0.4) == pytest.approx(1.0, rel=1e-15)

    def test_rational_example(self):
        exact = oracles.abq_weight(1, Fr(1, 4), Fr(1, 2), Fr(1, 2))
        assert exact == Fr(62, 343)
        assert abq_weight(1, 0.25, 0.5, 0.5) == pytest.approx(float(exact), rel=1e-14)

    @settings(max_examples=200, deadline=None)
    @given(x=st.floats(0, 6), params=positivity_params())
    def test_positive_on_positivity_domain(self, x, params):
        a, b, q = params
        assert abq_weight(x, a, b, q) > 0


class TestNegativeArgument:
    def test_zero(self):
        assert abq_number_negative(0, 0.25, 0.5, 0.5) == 0.0

    def test_one(self):
        assert abq_number_negative(1, 0.25, 0.5, 0.5) == pytest.approx(1.0, rel=1e-13)

    @settings(max_examples=100, deadline=None)
    @given(x=st.floats(0.01, 3), params=positivity_params())
    def test_matches_direct(self, x, params):
        a, b, q = params
        direct = abq_number(x, a, b, q)
        assert abs(abq_number_negative(x, a, b, q) - direct) <= 1e-10 * max(1, abs(direct))


@settings(max_examples=300, deadline=None)
@given(x=st.floats(0, 5), y=st.floats(0, 5), params=positivity_params())
def test_addition_formula(x, y, params):
    a, b, q = params
    qx = q**x
    lhs = abq_number(x, a, b, q) + abq_weight(x, a, b, q) * abq_number(y - x, a * qx * qx, b * qx, q)
    rhs = abq_number(y, a, b, q)
    assert abs(lhs - rhs) <= 1e-10 * max(1, abs(lhs), abs(rhs))


@settings(max_examples=300, deadline=None)
@given(x=st.floats(0, 6), d=st.floats(0, 3), params=positivity_params())
def test_order_relation(x, d, params):
    a, b, q = params
    lo, hi = abq_number(x, a, b, q), abq_number(x + d, a, b, q)
    assert hi >= lo - 1e-12 * max(1, abs(lo))


class TestParamSet:
    def test_validation(self):
        with pytest.raises(DomainError):
            ParamSet(q=1.0)
        with pytest.raises(DomainError):
            ParamSet(q=0.5, a=-0.1)
        with pytest.raises(DomainError):
            ParamSet(q=0.5, p=1.0)

    def test_domain_flags(self):
        flags = ParamSet(q=0.5, a=0.2, b=0.6).domains(k=1)
        assert flags["positivity"] and flags["binom_top"]
        assert not flags["elliptic"]
        assert not ParamSet(q=0.5, a=0.7, b=0.6).domains()["positivity"]


class TestKernel:
    spec = KernelSpec(x=1.5, r=0.7, q=0.6)

    def test_at_zero(self):
        assert f_kernel(0.0, 1.5, 0.7, 0.6) == 1.0

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            KernelSpec(x=0.5, r=0.7, q=0.6)
        with pytest.raises(DomainError):
            KernelSpec(x=1.0, r=0.0, q=0.6)

    def test_outside_unit_interval(self):
        with pytest.raises(DomainError):
            f_kernel(1.2, 1.5, 0.7, 0.6)

    def test_d1_finite_difference(self):
        h = 1e-5
        fd = (self.spec.f(0.5 + h) - self.spec.f(0.5 - h)) / (2 * h)
        assert self.spec.d1(0.5) == pytest.approx(fd, rel=1e-6)

    def test_d2_finite_difference(self):
        h = 1e-5
        fd = (self.spec.d1(0.5 + h) - self.spec.d1(0.5 - h)) / (2 * h)
        assert self.spec.d2(0.5) == pytest.approx(fd, rel=1e-6)

    @settings(max_examples=300, deadline=None)
    @given(u=st.floats(0.001, 0.999), r=st.floats(0.01, 3), dx=st.floats(0, 3), q=unit)
    def test_derivative_signs(self, u, r, dx, q):
        x = r + dx
        assert f_kernel_d1(u, x, r, q) < 0
        assert f_kernel_d2(u, x, r, q) < 0


class TestTuran:
    def test_symmetric_cancellation(self):
        f = KernelSpec(2.0, 0.5, 0.5).f
        assert turan_ratio(f, 0.9, 0.4, 0.4) == pytest.approx(1.0, rel=1e-15)

    @settings(max_examples=300, deadline=None)
    @given(s=st.floats(0.01, 0.99), t=st.floats(0.01, 0.99), r=st.floats(0.05, 2),
           dx=st.floats(0.01, 2), q=unit)
    def test_kernel_ratio_at_most_one(self, s, t, r, dx, q):
        a, b = sorted((s, t))
        f = KernelSpec(r + dx, r, q).f
        assert turan_ratio(f, 1.0, a, b) <= 1 + 1e-10

    @settings(max_examples=200, deadline=None)
    @given(s=st.floats(0.01, 0.7), t=st.floats(0.01, 0.7), lam=st.floats(0.05, 0.7))
    def test_gaussian_ratio_at_most_one(self, s, t, lam):
        # exp(-u^2) is positive, decreasing and concave on [0, 1/sqrt(2)]
        a, b = sorted((s, t))
        assume(b < lam)

        def f(u):
            return math.exp(-u * u)

        assert turan_ratio(f, lam, a, b) <= 1 + 1e-12

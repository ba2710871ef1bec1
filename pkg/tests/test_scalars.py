"""Tests for exact Laurent polynomial scalars."""

from fractions import Fraction

import pytest

from src.qschur_calculus.errors import DomainError
from src.qschur_calculus.scalars import ONE, Q, ZERO, LaurentQ, qbinom, qfact, qint


class TestLaurentQ:
    def test_zero_coefficients_are_dropped(self):
        p = LaurentQ({2: 0, 1: 3, -1: Fraction(0)})
        assert p.coeffs == {1: Fraction(3)}
        assert LaurentQ({5: 0}) == ZERO
        assert not ZERO

    def test_arithmetic(self):
        p = Q + 1
        assert p * p == LaurentQ({2: 1, 1: 2, 0: 1})
        assert p - p == ZERO
        assert 2 - Q == LaurentQ({0: 2, 1: -1})
        assert (p * Q**-1).degree_range() == (-1, 0)

    def test_negative_power_needs_monomial(self):
        assert LaurentQ.q_power(2, 3) ** -1 == LaurentQ({-2: Fraction(1, 3)})
        with pytest.raises(DomainError):
            (Q + 1) ** -1

    def test_bar_is_an_involution_and_ring_map(self):
        p = LaurentQ({3: 2, -1: Fraction(1, 2)})
        r = LaurentQ({1: -1, 0: 4})
        assert p.bar().bar() == p
        assert (p * r).bar() == p.bar() * r.bar()

    def test_specialize(self):
        assert qint(3).specialize(1) == 3
        assert (Q**-2).specialize(2) == Fraction(1, 4)
        with pytest.raises(DomainError):
            (Q**-1).specialize(0)

    def test_text_form(self):
        assert str(ZERO) == "0"
        assert str(qint(2)) == "q^1 + q^-1"
        assert str(LaurentQ({0: -1, 2: 3})) == "3*q^2 - 1"
        assert qint(2).to_json() == {"1": "1", "-1": "1"}

    def test_shifted_terms_have_one_normal_form(self):
        p = (Q**5 + Q**3) * Q**-3
        assert p == LaurentQ({2: 1, 0: 1})
        assert hash(p) == hash(Q**2 + 1)
        assert p.coefficient(2) == 1
        assert p.coefficient(-4) == 0
        assert (p - 1 - Q**2).degree_range() is None

    def test_specialize_at_a_fraction(self):
        assert (qint(2) * Fraction(1, 2)).specialize(Fraction(1, 2)) == Fraction(5, 4)
        assert LaurentQ({-1: 3, 2: -1}).specialize(-1) == -4

    def test_equality_with_integers(self):
        assert ONE == 1
        assert LaurentQ.constant(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(LaurentQ({1: 1})) == hash(Q)


class TestQuantumNumbers:
    def test_qint_examples(self):
        assert qint(2) == Q + Q**-1
        assert qint(0) == ZERO
        assert qint(-3) == -(Q**2 + 1 + Q**-2)

    def test_qint_recursion(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                assert qint(a) * Q**b + qint(b) * Q ** (-a) == qint(a + b)

    def test_qfact(self):
        assert qfact(0) == ONE
        assert qfact(1) == ONE
        assert qfact(3) == LaurentQ({3: 1, 1: 2, -1: 2, -3: 1})
        with pytest.raises(DomainError):
            qfact(-1)

    def test_qbinom(self):
        assert qbinom(2, 1) == qint(2)
        assert qbinom(4, 2) == LaurentQ({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
        with pytest.raises(DomainError):
            qbinom(1, 2)

    def test_qbinom_symmetry_and_positivity(self):
        for m in range(9):
            for k in range(m + 1):
                value = qbinom(m, k)
                assert value == qbinom(m, m - k)
                assert all(c > 0 and c.denominator == 1 for c in value.coeffs.values())
                assert value * qfact(k) * qfact(m - k) == qfact(m)

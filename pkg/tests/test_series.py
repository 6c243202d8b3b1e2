from fractions import Fraction

import pytest

from mzv.products import stuffle
from mzv.series import (
    RATIONAL_RING,
    TruncatedSeries,
    from_coeff_list,
    word_ring,
)
from mzv.words import WordSum


R = RATIONAL_RING


class TestRationalSeries:
    def test_mul_truncates(self):
        a = from_coeff_list(R, [Fraction(1), Fraction(1)], trunc=3)
        b = a * a * a
        assert b.coeff(3) == 1
        assert b.coeff((0,)) == 1

    def test_geometric_inverse(self):
        one_minus_t = TruncatedSeries(R, 1, 6, {(0,): Fraction(1), (1,): Fraction(-1)})
        inv = one_minus_t.inverse()
        assert all(inv.coeff(i) == 1 for i in range(7))
        assert one_minus_t * inv == TruncatedSeries.one(R, 1, 6)

    def test_inverse_needs_unit_constant(self):
        t = TruncatedSeries.variable(R, 1, 4, 0)
        with pytest.raises(ValueError):
            t.inverse()

    def test_exp_of_t(self):
        t = TruncatedSeries.variable(R, 1, 5, 0)
        e = t.exp()
        for i in range(6):
            assert e.coeff(i) == Fraction(1, __import__("math").factorial(i))

    def test_exp_needs_zero_constant(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(R, 1, 3).exp()

    def test_derivative(self):
        s = from_coeff_list(R, [Fraction(5), Fraction(0), Fraction(3)])
        d = s.derivative()
        assert d.coeff(1) == 6 and d.coeff(0) == 0

    def test_bivariate_product(self):
        u = TruncatedSeries.variable(R, 2, 4, 0)
        v = TruncatedSeries.variable(R, 2, 4, 1)
        p = (u + v) * (u + v)
        assert p.coeff((1, 1)) == 2
        assert p.coeff((2, 0)) == 1

    def test_exp_log_inverse_consistency(self):
        t = TruncatedSeries.variable(R, 1, 6, 0)
        e = t.exp()
        em = (-t).exp()
        assert e * em == TruncatedSeries.one(R, 1, 6)


class TestWordSeries:
    def test_stuffle_exponential(self):
        ring = word_ring(stuffle)
        z2 = WordSum.from_index((2,))
        arg = TruncatedSeries(ring, 1, 3, {(1,): z2})
        e = arg.exp()
        # degree-2 coefficient is half the stuffle square
        assert e.coeff(2) == stuffle(z2, z2).scale(Fraction(1, 2))

    def test_scale_elem(self):
        ring = word_ring(stuffle)
        s = TruncatedSeries(ring, 1, 2, {(1,): WordSum.from_index((2,))})
        doubled = s.scale(2)
        assert doubled.coeff(1) == WordSum.from_index((2,)).scale(2)

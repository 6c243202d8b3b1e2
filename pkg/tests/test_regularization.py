import math
from fractions import Fraction

import pytest
from mpmath import mp, workdps

from mzv import numerics
from mzv.maps import s_inv, s_map
from mzv.products import PRODUCTS, shuffle, stuffle
from mzv.regularization import (
    PRODUCT_TAGS,
    PrecisionExhausted,
    RegDecomposition,
    TPolynomial,
    reg,
    reg_decompose,
    rho_apply,
    y_power,
    z_reg_polynomial,
)
from mzv.words import NotInH1, WordSum, enumerate_words


class TestDecomposition:
    def test_shuffle_example(self):
        dec = reg_decompose("yxy", "shuffle")
        assert dec.coefficients == (WordSum({"xyy": -2}), WordSum({"xy": 1}))

    def test_already_admissible(self):
        dec = reg_decompose("xyy", "shuffle")
        assert dec.coefficients == (WordSum.word("xyy"),)

    def test_stuffle_example(self):
        dec = reg_decompose("yxy", "stuffle")
        assert dec.coefficients == (WordSum({"xyy": -1, "xxy": -1}), WordSum({"xy": 1}))

    def test_pure_y_word(self):
        dec = reg_decompose("yy", "shuffle")
        assert dec.reg.is_zero()
        assert dec.coefficients[2] == WordSum.one().scale(Fraction(1, 2))

    def test_requires_h1(self):
        with pytest.raises(NotInH1):
            reg_decompose("xyx", "shuffle")

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            reg_decompose("xy", "quantum")

    @pytest.mark.parametrize("tag", PRODUCT_TAGS)
    def test_reconstruction_all_words(self, tag):
        for k in range(10):
            for w in enumerate_words(k, "H1"):
                dec = reg_decompose(w, tag)
                assert dec.reconstruct() == WordSum.word(w), (tag, w)
                assert all(c.in_h0() for c in dec.coefficients)

    def test_star_conjugation_componentwise(self, sampler):
        for _ in range(30):
            w = WordSum.word(sampler.word(7, "H1"))
            left = reg_decompose(w, "star_shuffle").coefficients
            right = tuple(s_inv(c) for c in
                          reg_decompose(s_map(w), "shuffle").coefficients)
            assert left == right

    @pytest.mark.parametrize("tag", PRODUCT_TAGS)
    def test_homomorphism(self, tag, sampler):
        space = "H1"
        prod = PRODUCTS[tag]
        for _ in range(25):
            u = sampler.word_sum(4, space)
            v = sampler.word_sum(3, space)
            assert reg(prod(u, v), tag) == prod(reg(u, tag), reg(v, tag))

    def test_y_power_normalization(self):
        for i in range(9):
            assert y_power("shuffle", i) == WordSum({"y" * i: math.factorial(i)})

    def test_render(self):
        dec = reg_decompose("yxy", "shuffle")
        assert str(dec) == "[-2*xyy] + [xy] (sh) y^1"


class TestRegProjection:
    def test_euler_derivation(self):
        got = reg(shuffle("y", "xy") - stuffle("y", "xy"), "shuffle")
        assert got == WordSum({"xyy": 1, "xxy": -1})

    def test_identity_on_h0(self, sampler):
        for _ in range(20):
            w = WordSum.word(sampler.word(6, "H0"))
            assert reg(w, "shuffle") == w

    def test_kills_y_multiples(self, sampler):
        for _ in range(20):
            w0 = WordSum.word(sampler.word(5, "H0"))
            assert reg(shuffle("y", w0), "shuffle").is_zero()


class TestTPolynomial:
    def test_trim(self):
        assert TPolynomial([1, 2, 0, 0]).degree() == 1

    def test_arithmetic(self):
        p = TPolynomial([1, 2])
        q = TPolynomial([0, 1, 3])
        assert (p + q).coefficients == (1, 3, 3)
        assert (p - p).degree() == -1

    def test_str(self):
        assert str(TPolynomial([2, 0, 1])) == "2 + 0 T + 1 T^2"


class TestRho:
    def test_low_degrees(self):
        with workdps(40):
            zs = lambda n: numerics.zeta(n, 30)
            assert rho_apply(TPolynomial([1]), zs).coefficients == (1,)
            p = rho_apply(TPolynomial([0, 1]), zs)
            assert p.degree() == 1 and abs(p.coeff(1) - 1) < mp.mpf("1e-25")
            assert abs(p.coeff(0)) < mp.mpf("1e-25")

    def test_degree_two(self):
        with workdps(40):
            zs = lambda n: numerics.zeta(n, 30)
            p = rho_apply(TPolynomial([0, 0, 1]), zs)
            assert abs(p.coeff(0) - numerics.zeta(2, 30)) < mp.mpf("1e-25")
            assert abs(p.coeff(1)) < mp.mpf("1e-25")
            assert abs(p.coeff(2) - 1) < mp.mpf("1e-25")

    def test_exhausted_table(self):
        with pytest.raises(PrecisionExhausted):
            rho_apply(TPolynomial([0, 0, 0, 1]), [None, None, 1.0], degree_bound=2)


class TestZRegPolynomial:
    def evaluate(self, ws):
        return numerics.evaluate_word_sum(ws, 40)

    def test_admissible_word(self):
        with workdps(50):
            p = z_reg_polynomial(WordSum.word("xy"), "shuffle", self.evaluate)
            assert p.degree() == 0
            assert abs(p.coeff(0) - mp.pi ** 2 / 6) < mp.mpf("1e-35")

    def test_single_y(self):
        with workdps(50):
            p = z_reg_polynomial(WordSum.word("y"), "shuffle", self.evaluate)
            assert p.degree() == 1
            assert abs(p.coeff(1) - 1) < mp.mpf("1e-35")
            assert abs(p.coeff(0)) < mp.mpf("1e-35")

    def test_divergent_word(self):
        with workdps(50):
            p = z_reg_polynomial(WordSum.word("yxy"), "shuffle", self.evaluate)
            z21 = numerics.mzv((2, 1), 40)
            assert abs(p.coeff(0) + 2 * z21) < mp.mpf("1e-35")
            assert abs(p.coeff(1) - mp.pi ** 2 / 6) < mp.mpf("1e-35")


class TestComparisonMap:
    """The two regularized values agree after applying the comparison map."""

    @pytest.mark.parametrize("weight", range(0, 7))
    def test_shuffle_equals_rho_of_stuffle(self, weight):
        digits = 40
        zs = lambda n: numerics.zeta(n, digits)
        evaluate = lambda ws: numerics.evaluate_word_sum(ws, digits)
        with workdps(digits + numerics.GUARD_DIGITS):
            tol = mp.mpf("1e-30")
            for w in enumerate_words(weight, "H1"):
                lhs = z_reg_polynomial(WordSum.word(w), "shuffle", evaluate)
                rhs = rho_apply(z_reg_polynomial(WordSum.word(w), "stuffle", evaluate), zs)
                delta = (lhs - rhs).max_abs()
                assert delta < tol, (w, delta)
                # the constant terms agree as well (the T = 0 specialization)
                assert abs(lhs.at_zero() - rhs.at_zero()) < tol

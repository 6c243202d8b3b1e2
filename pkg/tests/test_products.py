from fractions import Fraction

import pytest

from conftest import brute_shuffle, brute_stuffle
from mzv.maps import s_inv, s_map
from mzv.products import product_power, shuffle, star_shuffle, star_stuffle, stuffle
from mzv.words import NotInH1, WordSum, enumerate_words, word_to_index


Z2 = WordSum.from_index((2,))


class TestShuffle:
    def test_depth_one_square(self):
        assert shuffle(Z2, Z2) == WordSum({"xyxy": 2, "xxyy": 4})

    def test_unit(self):
        for w in ("", "xy", "yxx"):
            assert shuffle(w, "") == WordSum.word(w)

    def test_small_case(self):
        assert shuffle("y", "xy") == WordSum({"yxy": 1, "xyy": 2})

    def test_against_position_oracle(self, sampler):
        for _ in range(60):
            u = sampler.word(4)
            v = sampler.word(4)
            assert shuffle(u, v) == brute_shuffle(u, v)


class TestStuffle:
    def test_depth_one_square(self):
        assert stuffle(Z2, Z2) == WordSum({"xyxy": 2, "xxxy": 1})

    def test_unit(self):
        assert stuffle("xyy", "") == WordSum.word("xyy")

    def test_small_case(self):
        assert stuffle("y", "xy") == WordSum({"yxy": 1, "xyy": 1, "xxy": 1})

    def test_against_position_oracle(self, sampler):
        for _ in range(60):
            u = sampler.word(4, "H1")
            v = sampler.word(4, "H1")
            assert stuffle(u, v) == brute_stuffle(word_to_index(u), word_to_index(v))

    def test_rejects_non_h1(self):
        with pytest.raises(NotInH1):
            stuffle("yx", "y")


class TestStarShuffle:
    def test_small_case(self):
        assert star_shuffle("y", "xy") == WordSum({"yxy": 1, "xyy": 2, "xxy": -3})

    def test_unit(self):
        assert star_shuffle("xxy", "") == WordSum.word("xxy")

    def test_two_letters(self):
        assert star_shuffle("y", "y") == WordSum({"yy": 2, "xy": -2})

    def test_conjugation_oracle(self, sampler):
        # the star product is determined by S(u sbar v) = S(u) sh S(v)
        for _ in range(60):
            u = sampler.word(4)
            v = sampler.word(4)
            assert star_shuffle(u, v) == s_inv(shuffle(s_map(u), s_map(v)))


class TestStarStuffle:
    def test_small_case(self):
        assert star_stuffle("y", "xy") == WordSum({"yxy": 1, "xyy": 1, "xxy": -1})

    def test_unit(self):
        assert star_stuffle("xy", "") == WordSum.word("xy")

    def test_depth_one_square(self):
        assert star_stuffle(Z2, Z2) == WordSum({"xyxy": 2, "xxxy": -1})

    def test_conjugation_oracle(self, sampler):
        for _ in range(60):
            u = sampler.word(4, "H1")
            v = sampler.word(4, "H1")
            assert star_stuffle(u, v) == s_inv(stuffle(s_map(u), s_map(v)))


ALL_PRODUCTS = [
    (shuffle, "H"),
    (stuffle, "H1"),
    (star_shuffle, "H"),
    (star_stuffle, "H1"),
]


class TestAlgebraLaws:
    @pytest.mark.parametrize("product,space", ALL_PRODUCTS)
    def test_commutativity_exhaustive(self, product, space):
        for total in range(7):
            for a in range(total + 1):
                for u in enumerate_words(a, space):
                    for v in enumerate_words(total - a, space):
                        assert product(u, v) == product(v, u)

    @pytest.mark.parametrize("product,space", ALL_PRODUCTS)
    def test_associativity_exhaustive(self, product, space):
        for total in range(7):
            for a in range(total + 1):
                for b in range(total - a + 1):
                    for u in enumerate_words(a, space):
                        for v in enumerate_words(b, space):
                            for w in enumerate_words(total - a - b, space):
                                lhs = product(product(u, v), WordSum.word(w))
                                rhs = product(WordSum.word(u), product(v, w))
                                assert lhs == rhs

    @pytest.mark.parametrize("product,space", ALL_PRODUCTS)
    def test_weight_additivity(self, product, space, sampler):
        for _ in range(40):
            u = sampler.word(5, space, min_weight=1)
            v = sampler.word(5, space, min_weight=1)
            out = product(u, v)
            assert out.homogeneous_weight() == len(u) + len(v)

    @pytest.mark.parametrize("product", [shuffle, star_shuffle])
    def test_h1_h0_closure(self, product, sampler):
        for _ in range(40):
            u = sampler.word(5, "H1")
            v = sampler.word(5, "H1")
            assert product(u, v).in_h1()
        for _ in range(40):
            u = sampler.word(5, "H0", min_weight=2)
            v = sampler.word(5, "H0", min_weight=2)
            assert product(u, v).in_h0()

    @pytest.mark.parametrize("product", [stuffle, star_stuffle])
    def test_h0_closure(self, product, sampler):
        for _ in range(40):
            u = sampler.word(5, "H0", min_weight=2)
            v = sampler.word(5, "H0", min_weight=2)
            assert product(u, v).in_h0()

    def test_bilinearity(self, sampler):
        for product, space in ALL_PRODUCTS:
            a = sampler.word_sum(4, space)
            b = sampler.word_sum(4, space)
            c = sampler.word_sum(4, space)
            r = Fraction(3, 2)
            assert product(a + b.scale(r), c) == product(a, c) + product(b, c).scale(r)


def test_product_power():
    assert product_power(shuffle, WordSum.word("y"), 3) == WordSum({"yyy": 6})
    assert product_power(stuffle, WordSum.word("y"), 0) == WordSum.one()

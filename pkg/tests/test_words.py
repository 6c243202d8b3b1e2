from fractions import Fraction

import pytest

from mzv.words import (
    NotInH0,
    NotInH1,
    WordSum,
    dual_word,
    enumerate_indices,
    enumerate_words,
    format_word_sum,
    in_h0,
    in_h1,
    index_to_word,
    weight_depth_height,
    word_to_index,
    zagier_d,
)


class TestIndexEncoding:
    def test_single_block(self):
        assert index_to_word((2,)) == "xy"

    def test_two_blocks(self):
        assert index_to_word((2, 1)) == "xyy"

    def test_empty(self):
        assert index_to_word(()) == ""

    @pytest.mark.parametrize("word,index", [
        ("xxy", (3,)),
        ("xyy", (2, 1)),
        ("xyxy", (2, 2)),
    ])
    def test_word_to_index(self, word, index):
        assert word_to_index(word) == index

    def test_word_to_index_requires_h1(self):
        with pytest.raises(NotInH1):
            word_to_index("xyx")

    def test_round_trip_all_weight_le_7(self):
        for k in range(8):
            for w in enumerate_words(k, "H1"):
                assert index_to_word(word_to_index(w)) == w


class TestStatistics:
    @pytest.mark.parametrize("idx,out", [
        ((3, 1), (4, 2, 1)),
        ((2, 2), (4, 2, 2)),
        ((), (0, 0, 0)),
    ])
    def test_weight_depth_height(self, idx, out):
        assert weight_depth_height(idx) == out

    def test_membership_predicates(self):
        assert in_h1("") and in_h0("")
        assert in_h1("xy") and in_h0("xy")
        assert in_h1("yy") and not in_h0("yy")
        assert not in_h1("yx")


class TestDual:
    def test_self_dual(self):
        assert dual_word("xy") == "xy"

    def test_weight_three(self):
        assert dual_word("xxy") == "xyy"
        assert dual_word("xyxy") == "xyxy"

    def test_involution(self):
        for k in range(2, 9):
            for w in enumerate_words(k, "H0"):
                assert dual_word(dual_word(w)) == w

    def test_requires_h0(self):
        with pytest.raises(NotInH0):
            dual_word("yx")


class TestEnumeration:
    def test_examples(self):
        assert enumerate_words(3, "H0") == ["xxy", "xyy"]
        assert enumerate_words(2, "H0") == ["xy"]
        assert enumerate_words(1, "H0") == []

    def test_counts(self):
        for k in range(2, 11):
            assert len(enumerate_words(k, "H")) == 2 ** k
            assert len(enumerate_words(k, "H1")) == 2 ** (k - 1)
            assert len(enumerate_words(k, "H0")) == 2 ** (k - 2)

    def test_canonical_order(self):
        for k in range(1, 8):
            ws = enumerate_words(k, "H")
            assert ws == sorted(ws)

    def test_index_filters(self):
        assert enumerate_indices(4, depth=2, height=1) == [(3, 1)]
        assert enumerate_indices(4, depth=2, height=2) == [(2, 2)]


class TestZagierDimension:
    def test_paper_values(self):
        assert zagier_d(2) == 1
        assert zagier_d(3) == 1
        assert zagier_d(8) == 4

    def test_sequence(self):
        assert [zagier_d(k) for k in range(11)] == [1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7]


class TestWordSum:
    def test_vector_space_axioms(self, sampler):
        for _ in range(50):
            a = sampler.word_sum(6)
            b = sampler.word_sum(6)
            c = sampler.word_sum(6)
            r = Fraction(sampler.rng.randint(-5, 5), sampler.rng.randint(1, 5))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a + b).scale(r) == a.scale(r) + b.scale(r)
            assert a - a == WordSum.zero()

    def test_no_zero_coefficients_stored(self):
        ws = WordSum({"xy": 1}) - WordSum({"xy": 1})
        assert ws.is_zero() and len(ws) == 0

    def test_concat(self):
        left = WordSum({"x": 1, "y": 2})
        right = WordSum({"y": 1})
        assert left * right == WordSum({"xy": 1, "yy": 2})

    def test_scalar_ops(self):
        ws = WordSum({"xy": Fraction(1, 2)})
        assert 2 * ws == WordSum({"xy": 1})
        assert ws / 2 == WordSum({"xy": Fraction(1, 4)})

    def test_homogeneous_weight(self):
        assert WordSum({"xy": 1, "yy": 3}).homogeneous_weight() == 2
        with pytest.raises(ValueError):
            WordSum({"xy": 1, "y": 1}).homogeneous_weight()

    def test_rejects_inexact_coefficients(self):
        with pytest.raises(TypeError):
            WordSum({"xy": 0.5})


class TestSerialization:
    def test_examples(self):
        assert format_word_sum(WordSum({"xyxy": 2, "xxyy": 4})) == "4*xxyy + 2*xyxy"
        assert format_word_sum(WordSum({"xy": -1, "": Fraction(1, 2)})) == "1/2*() - xy"
        assert format_word_sum(WordSum.zero()) == "0"

    def test_index_rendering(self):
        assert format_word_sum(WordSum({"xyy": 1}), indices=True) == "(2,1)"

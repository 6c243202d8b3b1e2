import math

import pytest

from mzv.maps import (
    ohno_sigma,
    ohno_sigma_bar,
    ohno_sigma_bar_star,
    ohno_sigma_star,
    partial_n,
    partial_n_star,
    s_inv,
    s_map,
    s_tilde,
    s_tilde_inv,
    sigma,
    sigma_inv,
    tau,
)
from mzv.products import shuffle, stuffle
from mzv.regularization import reg
from mzv.words import NotInH0, NotInH1, WordSum, enumerate_words


def ws(word):
    return WordSum.word(word)


class TestSigmaFamily:
    def test_sigma_on_y(self):
        assert sigma("y") == WordSum({"x": 1, "y": 1})

    def test_sigma_multiplicative(self):
        assert sigma("xy") == WordSum({"xx": 1, "xy": 1})

    def test_sigma_inverse(self, sampler):
        for _ in range(50):
            u = sampler.word_sum(6)
            assert sigma_inv(sigma(u)) == u
            assert sigma(sigma_inv(u)) == u

    def test_sigma_is_shuffle_automorphism(self, sampler):
        for _ in range(30):
            u = sampler.word(4)
            v = sampler.word(4)
            assert sigma(shuffle(u, v)) == shuffle(sigma(u), sigma(v))


class TestSMaps:
    def test_star_expansion(self):
        assert s_map("xyy") == WordSum({"xxy": 1, "xyy": 1})

    def test_single_letter(self):
        assert s_map("y") == ws("y")

    def test_inverse_expansion(self):
        assert s_inv("xyy") == WordSum({"xxy": -1, "xyy": 1})

    def test_inverse_laws(self, sampler):
        for _ in range(50):
            u = sampler.word_sum(6)
            assert s_inv(s_map(u)) == u
            assert s_map(s_inv(u)) == u

    def test_preserves_subspaces(self, sampler):
        for _ in range(40):
            h1 = WordSum.word(sampler.word(6, "H1"))
            assert s_map(h1).in_h1() and s_inv(h1).in_h1()
            h0 = WordSum.word(sampler.word(6, "H0", min_weight=2))
            assert s_map(h0).in_h0() and s_inv(h0).in_h0()


class TestSTilde:
    def test_twists_last_letter(self):
        assert s_tilde("xy") == WordSum({"xx": 1, "xy": 1})

    def test_fixes_x(self):
        assert s_tilde("x") == ws("x")

    def test_inverse(self, sampler):
        for _ in range(50):
            u = sampler.word_sum(6)
            assert s_tilde_inv(s_tilde(u)) == u

    def test_composition_identity(self, sampler):
        # the last-letter twist equals the inverse prefix twist after sigma
        for _ in range(50):
            u = sampler.word_sum(6)
            assert s_tilde(u) == s_inv(sigma(u))


class TestTau:
    def test_reverse_and_swap(self):
        assert tau("xxy") == ws("xyy")
        assert tau("xy") == ws("xy")

    def test_involution(self, sampler):
        for _ in range(50):
            u = sampler.word_sum(6)
            assert tau(tau(u)) == u

    def test_antiautomorphism(self, sampler):
        for _ in range(30):
            u = sampler.word(4)
            v = sampler.word(4)
            assert tau(WordSum.word(u + v)) == tau(v) * tau(u)

    def test_shuffle_automorphism(self, sampler):
        for _ in range(30):
            u = sampler.word(4)
            v = sampler.word(4)
            assert tau(shuffle(u, v)) == shuffle(tau(u), tau(v))


class TestDerivations:
    def test_weight_one_example(self):
        assert partial_n(1, "xy") == WordSum({"xyy": 1, "xxy": -1})

    def test_kills_constants(self):
        assert partial_n(1, "").is_zero()

    def test_weight_two_on_letter(self):
        assert partial_n(2, "x") == WordSum({"xxy": 1, "xyy": 1})

    def test_leibniz(self, sampler):
        for n in (1, 2, 3):
            for _ in range(30):
                u = sampler.word(4)
                v = sampler.word(4)
                got = partial_n(n, WordSum.word(u + v))
                want = partial_n(n, u) * WordSum.word(v) + WordSum.word(u) * partial_n(n, v)
                assert got == want

    def test_raises_weight_and_preserves_h0(self, sampler):
        for n in (1, 2):
            for _ in range(20):
                w = sampler.word(5, "H0", min_weight=2)
                out = partial_n(n, w)
                assert out.homogeneous_weight() == len(w) + n
                assert out.in_h0()

    def test_star_closed_forms(self):
        assert partial_n_star(1, "x") == ws("xy")
        assert partial_n_star(1, "y") == WordSum({"xy": -1})
        assert partial_n_star(2, "x") == ws("xyy")

    def test_star_is_conjugate(self, sampler):
        for _ in range(30):
            u = sampler.word_sum(5)
            assert partial_n_star(1, u) == s_inv(partial_n(1, s_map(u)))

    def test_star_left_twisted_derivation(self, sampler):
        # D*(uv) = (S~^-1 o D* o S~)(u) v + u D*(v) on nonempty words
        for n in (1, 2):
            for _ in range(30):
                u = sampler.word(4, min_weight=1)
                v = sampler.word(4, min_weight=1)
                got = partial_n_star(n, WordSum.word(u + v))
                want = (s_tilde_inv(partial_n_star(n, s_tilde(u))) * WordSum.word(v)
                        + WordSum.word(u) * partial_n_star(n, v))
                assert got == want

    def test_tau_conjugate_is_derivation(self, sampler):
        for _ in range(30):
            u = sampler.word(4)
            v = sampler.word(4)
            bar = lambda w: tau(partial_n(1, tau(w)))
            got = bar(WordSum.word(u + v))
            want = bar(u) * WordSum.word(v) + WordSum.word(u) * bar(v)
            assert got == want


class TestOhnoOperators:
    def test_zero_is_identity(self):
        assert ohno_sigma(0, "xyy") == ws("xyy")
        assert ohno_sigma_bar(0, "xyy") == ws("xyy")

    def test_single_part(self):
        assert ohno_sigma(1, "xy") == ws("xxy")

    def test_two_parts(self):
        assert ohno_sigma(1, "xyy") == WordSum({"xxyy": 1, "xyxy": 1})

    def test_bar_example(self):
        assert ohno_sigma_bar(1, "xyy") == ws("xyyy")

    def test_bar_of_depth_one(self):
        # raising x^2 y by one in all conjugate ways gives the weight-4 slice
        assert ohno_sigma_bar(1, "xxy") == WordSum({"xxyy": 1, "xyxy": 1})

    def test_weight_and_depth(self, sampler):
        for m in (1, 2):
            for _ in range(20):
                w = sampler.word(5, "H1", min_weight=1)
                out = ohno_sigma(m, w)
                assert out.homogeneous_weight() == len(w) + m
                # depth = number of y letters is preserved
                assert {u.count("y") for u, _ in out.items()} == {w.count("y")}

    def test_counts_weak_compositions(self):
        out = ohno_sigma(3, "xyy")
        assert sum(c for _, c in out.items()) == 4  # compositions of 3 into 2 parts

    def test_domain_errors(self):
        with pytest.raises(NotInH1):
            ohno_sigma(1, "yx")
        with pytest.raises(NotInH0):
            ohno_sigma_bar(1, "yy")
        with pytest.raises(NotInH0):
            ohno_sigma_bar_star(1, "yy")

    def test_star_compositions(self, sampler):
        for m in (0, 1, 2):
            for _ in range(15):
                w = WordSum.word(sampler.word(5, "H1", min_weight=1))
                assert ohno_sigma_star(m, w) == s_inv(ohno_sigma(m, s_map(w)))
                w0 = WordSum.word(sampler.word(5, "H0", min_weight=2))
                assert ohno_sigma_bar_star(m, w0) == s_inv(ohno_sigma_bar(m, s_map(w0)))


def s_kn(k, n):
    return (WordSum.word("x") * shuffle("x" * (k - n - 1), "y" * (n - 1))
            * WordSum.word("y"))


class TestSumFormulaOperators:
    def test_bar_gives_depth_slice(self):
        # weight 4, depth 2 slice from the depth-1 generator
        got = ohno_sigma_bar(1, WordSum.from_index((3,)))
        assert got == WordSum({"xxyy": 1, "xyxy": 1})

    @pytest.mark.parametrize("k", range(2, 8))
    def test_slice_identity_family(self, k):
        for n in range(1, k):
            z = WordSum.from_index((k - n + 1,))
            lhs = ohno_sigma_bar(n - 1, z) - ohno_sigma(n - 1, z)
            assert lhs == s_kn(k, n) - WordSum.from_index((k,))

    @pytest.mark.parametrize("k", range(2, 8))
    def test_star_slice_identity(self, k):
        for n in range(1, k):
            z = WordSum.from_index((k - n + 1,))
            lhs = ohno_sigma_bar_star(n - 1, z) - ohno_sigma_star(n - 1, z)
            rhs = WordSum.zero()
            for i in range(1, n + 1):
                rhs = rhs + s_kn(k, i).scale((-1) ** (n - i) * math.comb(k - i - 1, n - i))
            assert lhs == rhs - WordSum.from_index((k,))

    @pytest.mark.parametrize("k", range(3, 8))
    def test_regularized_power_product(self, k):
        for n in range(2, k):
            lhs = reg(stuffle("y" * (n - 1), WordSum.from_index((k - n + 1,))),
                      "shuffle").scale((-1) ** (n - 1))
            assert lhs == s_kn(k, n) - s_kn(k, n - 1)

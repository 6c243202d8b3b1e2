from fractions import Fraction

import pytest
from mpmath import mp, workdps

from mzv import numerics
from mzv.relations import (
    FAMILIES,
    RelationVector,
    WeightMismatch,
    build_basis,
    cached_basis,
    combination_value,
    dimension_csv,
    dimension_report,
    gen_family,
    membership,
    quotient_dim,
)
from mzv.words import WordSum, zagier_d


class TestGenerators:
    def test_derivation_family_weight_three(self):
        vectors = [v for _, v in gen_family(3, "DERIV")]
        assert WordSum({"xyy": 1, "xxy": -1}) in vectors

    def test_fds_empty_at_weight_two_and_three(self):
        assert gen_family(2, "FDS") == []
        assert gen_family(3, "FDS") == []

    def test_ohno_family_weight_four(self):
        vectors = [v for _, v in gen_family(4, "OHNO")]
        assert WordSum({"xxyy": 1, "xyxy": 1, "xyyy": -1}) in vectors

    def test_all_families_admissible_and_homogeneous(self):
        for fam in FAMILIES:
            for weight in (4, 5, 6):
                for gid, vec in gen_family(weight, fam):
                    assert vec.in_h0(), (fam, gid)
                    assert vec.homogeneous_weight() == weight, (fam, gid)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            gen_family(4, "MYSTERY")


class TestBasis:
    @pytest.mark.parametrize("weight,rank", [(2, 0), (3, 1), (4, 3), (5, 6)])
    def test_ranks(self, weight, rank):
        assert build_basis(weight, ("RDS_IV",)).rank == rank

    def test_idempotent_echelon(self):
        a = build_basis(6, ("RDS_IV",))
        b = build_basis(6, ("RDS_IV",))
        assert [(r.pivot, r.entries) for r in a.rows] == \
               [(r.pivot, r.entries) for r in b.rows]

    def test_rows_fully_reduced(self):
        basis = build_basis(6, ("RDS_IV",))
        pivots = {row.pivot for row in basis.rows}
        for row in basis.rows:
            assert row.entries[row.pivot] == 1
            for col in row.entries:
                assert col == row.pivot or col not in pivots

    def test_echelon_vectors_round_trip(self):
        basis = build_basis(5, ("RDS_IV",))
        for vec in basis.echelon_vectors():
            cert = membership(vec, basis)
            assert cert.verdict == "MEMBER"


class TestMembership:
    def test_euler_relation(self):
        basis = cached_basis(3, ("RDS_IV",))
        cert = membership(WordSum({"xyy": 1, "xxy": -1}), basis)
        assert cert.verdict == "MEMBER"
        gens = dict(gen_family(3, "RDS_IV"))
        rebuilt = combination_value(cert.combination, gens)
        assert rebuilt == WordSum({"xyy": 1, "xxy": -1})

    def test_certificates_reproduce_candidates(self, sampler):
        weight = 6
        basis = cached_basis(weight, ("RDS_IV",))
        gens = dict(gen_family(weight, "RDS_IV"))
        for gid, vec in list(gens.items())[:20]:
            cert = membership(vec, basis)
            assert cert.verdict == "MEMBER"
            assert combination_value(cert.combination, gens) == vec

    def test_zero_vector(self):
        basis = cached_basis(4, ("RDS_IV",))
        cert = membership(WordSum.zero(), basis)
        assert cert.verdict == "MEMBER" and cert.combination == {}

    def test_non_member_with_residue(self):
        basis = cached_basis(2, ("RDS_IV",))
        cert = membership(WordSum.word("xy"), basis)
        assert cert.verdict == "NOT_MEMBER"
        assert cert.residue.word_sum() == WordSum.word("xy")

    def test_weight_mismatch(self):
        basis = cached_basis(3, ("RDS_IV",))
        with pytest.raises(WeightMismatch):
            membership(WordSum.word("xyxy"), basis)


class TestQuotientDimensions:
    @pytest.mark.parametrize("weight", range(2, 9))
    def test_match_zagier(self, weight):
        assert quotient_dim(weight, ("RDS_IV",)) == zagier_d(weight)

    def test_star_family_spans_like_plain(self):
        # empirical answer to whether the star family adds anything new
        for weight in range(4, 8):
            plain = build_basis(weight, ("OHNO",)).rank
            star = build_basis(weight, ("OHNO_STAR",)).rank
            both = build_basis(weight, ("OHNO", "OHNO_STAR")).rank
            assert plain == star == both

    def test_families_are_consequences(self):
        for weight in range(4, 8):
            basis = cached_basis(weight, ("RDS_IV",))
            for fam in ("DERIV", "OHNO", "RDS_V", "FDS", "OHNO_STAR"):
                for gid, vec in gen_family(weight, fam):
                    assert membership(vec, basis).verdict == "MEMBER", (fam, gid)


class TestNumericKill:
    @pytest.mark.parametrize("weight", range(3, 8))
    def test_generators_vanish_numerically(self, weight, sampler):
        digits = 40
        with workdps(digits + numerics.GUARD_DIGITS):
            tol = mp.mpf("1e-30")
            for fam in FAMILIES:
                gens = gen_family(weight, fam)
                sampler.rng.shuffle(gens)
                for gid, vec in gens[:6]:
                    value = numerics.evaluate_word_sum(vec, digits)
                    assert abs(value) < tol, (fam, gid, value)


class TestReports:
    def test_report_schema(self):
        report = dimension_report([4], ("RDS_IV",))
        assert set(report[0]) == {"weight", "families", "generators", "rank",
                                  "quotient_dim", "d_k", "match"}
        assert report[0]["match"] is True

    def test_csv(self):
        text = dimension_csv(dimension_report([3, 4], ("RDS_IV",)))
        lines = text.splitlines()
        assert lines[0].startswith("weight,")
        assert len(lines) == 3


class TestRelationVector:
    def test_rejects_inadmissible_support(self):
        with pytest.raises(ValueError):
            RelationVector.from_word_sum(WordSum.word("yxy"))

    def test_weight_inference(self):
        vec = RelationVector.from_word_sum(WordSum.word("xxy"))
        assert vec.weight == 3

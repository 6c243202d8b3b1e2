"""Weight-graded relation families, exact echelon spans, and membership tests.

Every relation family produces h0-supported word sums of one weight whose
values under the zeta map vanish.  Vectors are expressed over the canonical
basis of admissible words (lexicographic, x < y), echelonized exactly over Q
with full reduction, and kept with the combination of original generators
that produced each row, so membership answers come with certificates.

Families:

* ``FDS``      : shuffle(w1, w2) - stuffle(w1, w2) for w1, w2 in h0.
* ``RDS_IV``   : reg_shuffle(shuffle(w1, w0) - stuffle(w1, w0)), w1 in h1, w0 in h0.
* ``RDS_V``    : reg_shuffle(stuffle(y^m, w0)), m >= 1, w0 in h0.
* ``DERIV``    : partial_n(w0), n >= 1, w0 in h0.
* ``OHNO``     : (ohno_sigma_m - ohno_sigma_bar_m)(w0), m >= 1, w0 in h0.
* ``OHNO_STAR``: S applied to (ohno_sigma_star_m - ohno_sigma_bar_star_m)(w0)
  (the S pushes the star-value statement into plain-value h0 coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import maps, products, regularization
from .words import WordSum, enumerate_words, in_h0, zagier_d

FAMILIES = ("FDS", "RDS_IV", "RDS_V", "DERIV", "OHNO", "OHNO_STAR")


class WeightMismatch(ValueError):
    """Candidate and basis weights differ."""


@dataclass(frozen=True)
class RelationVector:
    """An h0-supported relation of one weight, tagged with its provenance."""

    weight: int
    entries: tuple[tuple[str, Fraction], ...]
    provenance: str = ""

    @classmethod
    def from_word_sum(cls, ws: WordSum, weight: int | None = None,
                      provenance: str = "") -> "RelationVector":
        if not ws.in_h0():
            raise ValueError("relation vectors must be supported on admissible words")
        if weight is None:
            weight = ws.homogeneous_weight()
            if weight < 0:
                raise ValueError("cannot infer the weight of a zero vector")
        elif not ws.is_zero() and ws.homogeneous_weight() != weight:
            raise WeightMismatch("vector weight does not match the stated weight")
        return cls(weight, tuple(ws.sorted_items()), provenance)

    def word_sum(self) -> WordSum:
        return WordSum(dict(self.entries))

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: str                                   # "MEMBER" | "NOT_MEMBER"
    combination: dict[str, Fraction] | None = None  # generator id -> coefficient
    residue: RelationVector | None = None

    @property
    def is_member(self) -> bool:
        return self.verdict == "MEMBER"


@dataclass
class _Row:
    pivot: int
    entries: dict[int, Fraction]
    combo: dict[str, Fraction]


@dataclass
class RelationBasis:
    """Reduced echelon span over the admissible words of one weight."""

    weight: int
    families: tuple[str, ...]
    columns: tuple[str, ...]
    rows: list[_Row] = field(default_factory=list)
    generator_count: int = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def quotient_dim(self) -> int:
        return len(self.columns) - self.rank

    def echelon_vectors(self) -> list[RelationVector]:
        out = []
        for row in self.rows:
            ws = WordSum({self.columns[i]: c for i, c in row.entries.items()})
            out.append(RelationVector.from_word_sum(ws, self.weight, "echelon"))
        return out


# -- generator families -------------------------------------------------------

def _h0_words(k: int) -> list[str]:
    return enumerate_words(k, "H0") if k >= 2 else []


def _h1_words(k: int) -> list[str]:
    return enumerate_words(k, "H1") if k >= 1 else []


def gen_family(weight: int, family: str) -> list[tuple[str, WordSum]]:
    """All generators of one family at one weight, as (id, vector) pairs."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if weight < 2:
        raise ValueError("weight must be >= 2")
    out: list[tuple[str, WordSum]] = []

    if family == "FDS":
        for a in range(2, weight - 1):
            for w1 in _h0_words(a):
                for w2 in _h0_words(weight - a):
                    if w2 < w1:
                        continue  # the products are commutative
                    vec = products.shuffle(w1, w2) - products.stuffle(w1, w2)
                    out.append((f"fds({w1},{w2})", vec))

    elif family == "RDS_IV":
        for a in range(1, weight - 1):
            for w1 in _h1_words(a):
                for w0 in _h0_words(weight - a):
                    diff = products.shuffle(w1, w0) - products.stuffle(w1, w0)
                    vec = regularization.reg(diff, "shuffle")
                    out.append((f"rds4({w1},{w0})", vec))

    elif family == "RDS_V":
        for m in range(1, weight - 1):
            ym = "y" * m
            for w0 in _h0_words(weight - m):
                vec = regularization.reg(products.stuffle(ym, w0), "shuffle")
                out.append((f"rds5(y^{m},{w0})", vec))

    elif family == "DERIV":
        for n in range(1, weight - 1):
            for w0 in _h0_words(weight - n):
                out.append((f"deriv({n},{w0})", maps.partial_n(n, w0)))

    elif family == "OHNO":
        for m in range(1, weight - 1):
            for w0 in _h0_words(weight - m):
                vec = maps.ohno_sigma(m, w0) - maps.ohno_sigma_bar(m, w0)
                out.append((f"ohno({m},{w0})", vec))

    elif family == "OHNO_STAR":
        for m in range(1, weight - 1):
            for w0 in _h0_words(weight - m):
                ws = WordSum.word(w0)
                vec = maps.s_map(maps.ohno_sigma_star(m, ws)
                                 - maps.ohno_sigma_bar_star(m, ws))
                out.append((f"ohnostar({m},{w0})", vec))

    return [(gid, v) for gid, v in out if not v.is_zero()]


# -- echelonization -----------------------------------------------------------

def _column_index(columns: tuple[str, ...]) -> dict[str, int]:
    return {w: i for i, w in enumerate(columns)}


def _to_columns(ws: WordSum, colidx: dict[str, int]) -> dict[int, Fraction]:
    out = {}
    for w, c in ws.items():
        if w not in colidx:
            raise ValueError(f"word {w!r} is not an admissible word of this weight")
        out[colidx[w]] = c
    return out

def _reduce(entries: dict[int, Fraction], combo: dict[str, Fraction],
            pivots: dict[int, _Row]) -> None:
    """In-place full reduction of (entries, combo) against the pivot rows.

    The rows form a reduced echelon set (no row meets another row's pivot
    column), so eliminating each pivot column present in ``entries`` once is
    enough: the subtractions only ever introduce non-pivot columns.
    """
    for j in sorted(entries):
        row = pivots.get(j)
        if row is None:
            continue
        c = entries.get(j)
        if c:
            _axpy(entries, row.entries, -c)
            _axpy(combo, row.combo, -c)


def _axpy(target: dict, source: dict, factor: Fraction) -> None:
    if not factor:
        return
    for k, v in source.items():
        s = target.get(k, 0) + factor * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def _dedupe(generators: list[tuple[str, WordSum]]) -> list[tuple[str, WordSum]]:
    seen = set()
    out = []
    for gid, vec in generators:
        items = vec.sorted_items()
        lead = items[0][1]
        key = tuple((w, c / lead) for w, c in items)
        if key in seen:
            continue
        seen.add(key)
        out.append((gid, vec))
    return out


def build_basis(weight: int, families=("RDS_IV",)) -> RelationBasis:
    """Deterministic reduced echelon span of all family generators at a weight."""
    families = tuple(sorted(set(families)))
    columns = tuple(enumerate_words(weight, "H0"))
    colidx = _column_index(columns)
    basis = RelationBasis(weight, families, columns)

    generators: list[tuple[str, WordSum]] = []
    for fam in families:
        generators.extend(gen_family(weight, fam))
    generators = _dedupe(generators)
    basis.generator_count = len(generators)

    # pivot preference: leftmost leading column, then smallest support, then id
    staged = []
    for gid, vec in generators:
        entries = _to_columns(vec, colidx)
        staged.append((min(entries), len(entries), gid, entries))
    staged.sort(key=lambda t: (t[0], t[1], t[2]))

    pivots: dict[int, _Row] = {}
    for _, _, gid, entries in staged:
        combo = {gid: Fraction(1)}
        _reduce(entries, combo, pivots)
        if not entries:
            continue
        j = min(entries)
        lead = entries[j]
        entries = {k: v / lead for k, v in entries.items()}
        combo = {k: v / lead for k, v in combo.items()}
        new_row = _Row(j, entries, combo)
        for row in pivots.values():
            c = row.entries.get(j)
            if c:
                _axpy(row.entries, entries, -c)
                _axpy(row.combo, combo, -c)
        pivots[j] = new_row
    basis.rows = [pivots[j] for j in sorted(pivots)]
    return basis


_BASIS_CACHE: dict[tuple, RelationBasis] = {}


def cached_basis(weight: int, families=("RDS_IV",)) -> RelationBasis:
    key = (weight, tuple(sorted(set(families))))
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = build_basis(weight, key[1])
    return _BASIS_CACHE[key]


def membership(candidate, basis: RelationBasis) -> MembershipCertificate:
    """Exact reduction of a candidate against the basis, with certificate."""
    if isinstance(candidate, RelationVector):
        weight, ws = candidate.weight, candidate.word_sum()
    else:
        ws = candidate
        weight = ws.homogeneous_weight() if not ws.is_zero() else basis.weight
    if weight != basis.weight:
        raise WeightMismatch(f"candidate weight {weight} != basis weight {basis.weight}")

    colidx = _column_index(basis.columns)
    entries = _to_columns(ws, colidx)
    combo: dict[str, Fraction] = {}
    pivots = {row.pivot: row for row in basis.rows}
    _reduce(entries, combo, pivots)
    if not entries:
        return MembershipCertificate("MEMBER", {g: -c for g, c in combo.items()})
    residue = WordSum({basis.columns[i]: c for i, c in entries.items()})
    return MembershipCertificate(
        "NOT_MEMBER", residue=RelationVector.from_word_sum(residue, basis.weight, "residue"))


def combination_value(combination: dict[str, Fraction], generators: dict[str, WordSum]) -> WordSum:
    """Reassemble a certificate combination; used to verify certificates."""
    out = WordSum.zero()
    for gid, c in combination.items():
        out = out + generators[gid].scale(c)
    return out


def quotient_dim(weight: int, families=("RDS_IV",)) -> int:
    """Number of admissible words not killed by the span: 2^(w-2) - rank."""
    return cached_basis(weight, families).quotient_dim()


def dimension_report(weights, families=("RDS_IV",)) -> list[dict]:
    """Per-weight JSON-ready summary comparing the quotient with zagier_d."""
    report = []
    for k in weights:
        basis = cached_basis(k, families)
        qd = basis.quotient_dim()
        report.append({
            "weight": k,
            "families": list(basis.families),
            "generators": basis.generator_count,
            "rank": basis.rank,
            "quotient_dim": qd,
            "d_k": zagier_d(k),
            "match": qd == zagier_d(k),
        })
    return report


def dimension_csv(report: list[dict]) -> str:
    header = "weight,families,generators,rank,quotient_dim,d_k,match"
    lines = [header]
    for row in report:
        fams = "+".join(row["families"])
        lines.append(f'{row["weight"]},{fams},{row["generators"]},'
                     f'{row["rank"]},{row["quotient_dim"]},{row["d_k"]},{row["match"]}')
    return "\n".join(lines)

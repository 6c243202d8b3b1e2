"""Named constructors for the verification tasks of every supported identity.

Each catalog entry is data: a name, a parameter schema and a builder that
returns :class:`VerificationTask` objects of three kinds,

* ``symbolic``   : exact word-sum equalities (zero tolerance),
* ``membership`` : an admissible-supported candidate to reduce against a
  relation basis,
* ``numeric``    : scalar equalities checked at a digit count.

Star-value statements are always pushed into plain-value coordinates with the
map S before membership or numeric evaluation, so divergent star quantities
never appear.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import maps, numerics, products, regularization, relations
from .series import TruncatedSeries, word_ring
from .words import (
    NotAdmissible,
    WordSum,
    enumerate_indices,
    index_to_word,
    is_admissible,
)


# -- task objects ---------------------------------------------------------------

@dataclass
class VerificationTask:
    name: str
    params: dict
    kind: str                      # "symbolic" | "membership" | "numeric"
    checks: list = field(default_factory=list)
    experimental: bool = False

    def run(self, digits: int = 40, tolerance=None,
            families=("RDS_IV",)) -> "TaskResult":
        t0 = time.perf_counter()
        if self.kind == "symbolic":
            verdict, detail = self._run_symbolic()
        elif self.kind == "membership":
            verdict, detail = self._run_membership(families)
        else:
            verdict, detail = self._run_numeric(digits, tolerance)
        millis = (time.perf_counter() - t0) * 1000.0
        return TaskResult(self.name, self.params, self.kind, verdict, detail,
                          millis, self.experimental)

    def _run_symbolic(self):
        worst = Fraction(0)
        bad = None
        for label, lhs, rhs in self.checks:
            residue = lhs - rhs
            if residue:
                top = max(abs(c) for _, c in residue.items())
                if top > worst:
                    worst, bad = top, label
        if bad is None:
            return "PASS", "0"
        return "FAIL", f"{bad}: residue up to {worst}"

    def _run_membership(self, families):
        verdicts = []
        for label, candidate in self.checks:
            weight = candidate.homogeneous_weight()
            if weight < 0:
                verdicts.append(("MEMBER", label))
                continue
            basis = relations.cached_basis(weight, families)
            cert = relations.membership(candidate, basis)
            verdicts.append((cert.verdict, label))
        if all(v == "MEMBER" for v, _ in verdicts):
            return "MEMBER", "0"
        bad = [lab for v, lab in verdicts if v != "MEMBER"]
        return "NOT_MEMBER", f"residue in: {', '.join(bad)}"

    def _run_numeric(self, digits, tolerance):
        from mpmath import mp, workdps
        if tolerance is None:
            tolerance = Fraction(1, 10 ** (digits - 10))
        worst = None
        with workdps(digits + numerics.GUARD_DIGITS):
            tol = mp.mpf(tolerance.numerator) / tolerance.denominator \
                if isinstance(tolerance, Fraction) else mp.mpf(tolerance)
            for label, lhs_fn, rhs_fn in self.checks:
                delta = abs(lhs_fn(digits) - rhs_fn(digits))
                if worst is None or delta > worst[0]:
                    worst = (delta, label)
            delta, label = worst
            verdict = "PASS" if delta < tol else "FAIL"
            return verdict, mp.nstr(delta, 5)


@dataclass
class TaskResult:
    name: str
    params: dict
    kind: str
    verdict: str
    residue_or_delta: str
    millis: float
    experimental: bool = False

    @property
    def ok(self) -> bool:
        if self.experimental:
            return True
        return self.verdict in ("PASS", "MEMBER")

    def as_json(self) -> dict:
        return {
            "name": self.name, "params": self.params, "kind": self.kind,
            "verdict": self.verdict, "residue_or_delta": self.residue_or_delta,
            "millis": round(self.millis, 3),
        }


# -- small word builders -----------------------------------------------------------

def zw(*parts: int) -> WordSum:
    return WordSum.from_index(parts)


def _word(*parts: int) -> str:
    return index_to_word(parts)


def x_pow(a: int) -> WordSum:
    return WordSum.word("x" * a)


def y_pow(b: int) -> WordSum:
    return WordSum.word("y" * b)


def neg_x_plus_y_pow(b: int) -> WordSum:
    out = WordSum.one()
    img = WordSum({"x": -1, "y": 1})
    for _ in range(b):
        out = out.concat(img)
    return out


def x_shuffle_y(a: int, b: int) -> WordSum:
    """The shuffle x^a with y^b (a sum of binomial-many words)."""
    return products.shuffle("x" * a, "y" * b)


def s_kn(k: int, n: int) -> WordSum:
    """x (x^(k-n-1) shuffle y^(n-1)) y: the depth-n slice of the sum formula."""
    if not (k > n >= 1):
        raise ValueError("need k > n >= 1")
    return WordSum.word("x").concat(x_shuffle_y(k - n - 1, n - 1)).concat(WordSum.word("y"))


def compositions(total: int, parts: int, min_first: int = 1):
    """Ordered compositions of ``total`` into ``parts`` parts >= 1 (first >= min_first)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= min_first:
            yield (total,)
        return
    for first in range(min_first, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sum_over_compositions(total, parts, min_first=1, predicate=None) -> WordSum:
    out = WordSum.zero()
    for comp in compositions(total, parts, min_first):
        if predicate is None or predicate(comp):
            out = out + zw(*comp)
    return out


# -- Guo-Xie weight brackets ---------------------------------------------------------

def c_weight(parts: tuple[int, ...]) -> int:
    """sum_j 2^(k1+..+kj - j) with the final term counted twice."""
    acc = 0
    run = 0
    for j, kj in enumerate(parts, 1):
        run += kj
        acc += 2 ** (run - j)
    acc += 2 ** (run - len(parts))
    return acc


def _c_slice(parts: tuple[int, ...], k: int | None = None,
             doubly_dropped: bool = False) -> int:
    # conventions for the empty slices of short compositions
    if parts:
        return c_weight(parts)
    return (1 - k) if doubly_dropped else 1


def bracket_pair(prefix: tuple[int, ...]) -> int:
    """C(k1..k_{n-1}) - C(k2..k_{n-1}) with the empty tail counting 1."""
    return _c_slice(prefix) - _c_slice(prefix[1:])


def bracket_four(comp: tuple[int, ...], k: int) -> int:
    """The four-slice combination on a depth-(n-1) composition, with the
    short-composition conventions (doubly dropped singleton -> 1 - k)."""
    full = _c_slice(comp)
    drop_first = _c_slice(comp[1:])
    drop_last = _c_slice(comp[:-1])
    drop_both = _c_slice(comp[1:-1], k=k, doubly_dropped=(len(comp) == 1))
    return full - drop_first - drop_last + drop_both


# -- identity builders ----------------------------------------------------------------

def hoffman_relation(index, star: bool = False) -> list[VerificationTask]:
    index = tuple(index)
    if not is_admissible(index) or not index:
        raise NotAdmissible(f"index {index} must be admissible and nonempty")
    n = len(index)
    w = zw(*index)
    double_sum = WordSum.zero()
    for i, ki in enumerate(index):
        for j in range(ki - 1):
            parts = index[:i] + (ki - j, j + 1) + index[i + 1:]
            double_sum = double_sum + zw(*parts)
    single = WordSum.zero()
    for i, ki in enumerate(index):
        weight_i = (ki - 1 + (1 if i == n - 1 else 0)) if star else 1
        single = single + zw(*(index[:i] + (ki + 1,) + index[i + 1:])).scale(weight_i)
    rhs = double_sum - single
    params = {"index": list(index), "star": star}
    if star:
        lhs = maps.partial_n_star(1, w)
        diff = products.star_shuffle("y", w) - products.star_stuffle("y", w)
        candidate = maps.s_map(lhs)
    else:
        lhs = maps.partial_n(1, w)
        diff = products.shuffle("y", w) - products.stuffle("y", w)
        candidate = lhs
    sym = VerificationTask("hoffman", params, "symbolic", [
        ("derivation vs displayed sums", lhs, rhs),
        ("derivation vs product difference", lhs, diff),
    ])
    mem = VerificationTask("hoffman", params, "membership",
                           [("derivation image", candidate)])
    return [sym, mem]


def sum_formula(k: int, n: int, star: bool = False) -> list[VerificationTask]:
    if not (k > n >= 1):
        raise ValueError("need k > n >= 1")
    total = WordSum.zero()
    for idx in enumerate_indices(k, depth=n):
        w = zw(*idx)
        total = total + (maps.s_map(w) if star else w)
    target = zw(k).scale(math.comb(k - 1, n - 1) if star else 1)
    name = "sum-star" if star else "sum"
    return [VerificationTask(name, {"k": k, "n": n}, "membership",
                             [("depth slice minus total", total - target)])]


def _guo_xie_lhs(k: int, n: int, product) -> WordSum:
    out = WordSum.zero()
    for ell in range(1, k - 1):
        right = sum_over_compositions(k - ell, n - 1, min_first=2)
        if right:
            out = out + product(zw(ell), right)
    return out


def guo_xie(k: int, n: int, variant: str) -> list[VerificationTask]:
    if not (k > n >= 2):
        raise ValueError("need k > n >= 2")
    variant = variant.upper()
    if variant not in ("AST", "SHUFFLE", "S_AST", "S_SHUFFLE"):
        raise ValueError("variant must be AST, SHUFFLE, S_AST or S_SHUFFLE")

    if variant in ("AST", "S_AST"):
        prod = products.stuffle if variant == "AST" else products.star_stuffle
        lhs = _guo_xie_lhs(k, n, prod)
        rhs = (sum_over_compositions(k, n, predicate=lambda c: c[0] == 1 and c[1] >= 2)
               + sum_over_compositions(k, n, min_first=2,
                                       predicate=lambda c: c[1] == 1).scale(n - 1)
               + sum_over_compositions(k, n, min_first=2,
                                       predicate=lambda c: c[1] >= 2).scale(n)
               + sum_over_compositions(k, n - 1, min_first=2)
               .scale((k - n) if variant == "AST" else -(k - n)))
    else:
        prod = products.shuffle if variant == "SHUFFLE" else products.star_shuffle
        lhs = _guo_xie_lhs(k, n, prod)
        rhs = WordSum.zero()
        for comp in compositions(k, n):
            rhs = rhs + zw(*comp).scale(bracket_pair(comp[:-1]))
        rhs = rhs - sum_over_compositions(k, n, predicate=lambda c: c[1] == 1)
        if variant == "S_SHUFFLE":
            rhs = rhs + sum_over_compositions(k, n - 1, min_first=2)
            for comp in compositions(k, n - 1):
                rhs = rhs - zw(*comp).scale(bracket_four(comp, k))
    return [VerificationTask(f"guo-xie:{variant.lower().replace('_', '-')}",
                             {"k": k, "n": n}, "symbolic",
                             [("expanded product vs displayed sum", lhs, rhs)])]


def weighted_sum(k: int, n: int = 2, star: bool = False) -> list[VerificationTask]:
    if not (k > n >= 2):
        raise ValueError("need k > n >= 2")
    params = {"k": k, "n": n, "star": star}
    if not star:
        terms = [(bracket_pair(c[:-1]), c) for c in compositions(k, n, min_first=2)]

        def lhs_fn(digits, terms=terms):
            return sum(w * numerics.mzv(c, digits) for w, c in terms)

        def rhs_fn(digits):
            return k * numerics.zeta(k, digits)

        candidate = WordSum.zero()
        for wgt, c in terms:
            candidate = candidate + zw(*c).scale(wgt)
        candidate = candidate - zw(k).scale(k)
        return [
            VerificationTask("weighted", params, "numeric",
                             [("weighted depth sum vs k zeta(k)", lhs_fn, rhs_fn)]),
            VerificationTask("weighted", params, "membership",
                             [("weighted sum relation", candidate)]),
        ]

    deep = [(bracket_pair(c[:-1]), c) for c in compositions(k, n, min_first=2)]
    shallow = [(bracket_four(c, k), c) for c in compositions(k, n - 1, min_first=2)]

    def lhs_fn(digits, deep=deep, shallow=shallow):
        total = sum(w * numerics.mzv_star(c, digits) for w, c in deep)
        total -= sum(w * numerics.mzv_star(c, digits) for w, c in shallow)
        return total

    def rhs_fn(digits):
        return math.comb(k - 1, n - 1) * numerics.zeta(k, digits)

    return [VerificationTask("weighted", params, "numeric",
                             [("weighted star sums vs binomial zeta(k)", lhs_fn, rhs_fn)])]


def ohno_zudilin(k: int, star: bool = False) -> list[VerificationTask]:
    if k < 3:
        raise ValueError("need k >= 3")
    params = {"k": k, "star": star}
    pairs = [(i, k - i) for i in range(2, k)]
    if star:
        def lhs_fn(digits, pairs=pairs):
            return sum(2 ** i * numerics.mzv_star((i, k - i), digits) for i, _ in pairs)

        def rhs_fn(digits):
            return (2 ** k + k - 3) * numerics.zeta(k, digits)

        return [VerificationTask("ohno-zudilin", params, "numeric",
                                 [("power-weighted star double sum", lhs_fn, rhs_fn)])]

    def lhs_fn(digits, pairs=pairs):
        return sum(2 ** i * numerics.mzv((i, k - i), digits) for i, _ in pairs)

    def rhs_fn(digits):
        return (k + 1) * numerics.zeta(k, digits)

    candidate = WordSum.zero()
    for i, j in pairs:
        candidate = candidate + zw(i, j).scale(2 ** i)
    candidate = candidate - zw(k).scale(k + 1)
    return [
        VerificationTask("ohno-zudilin", params, "numeric",
                         [("power-weighted double sum", lhs_fn, rhs_fn)]),
        VerificationTask("ohno-zudilin", params, "membership",
                         [("power-weighted relation", candidate)]),
    ]


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def restricted_sum_eie(s: int, a, b, m: int) -> list[VerificationTask]:
    a = tuple(a) if isinstance(a, (tuple, list)) else (a,)
    b = tuple(b) if isinstance(b, (tuple, list)) else (b,)
    if len(a) != s or len(b) != s or s < 1 or m < 0:
        raise ValueError("need len(a) = len(b) = s >= 1 and m >= 0")
    if any(v < 1 for v in a + b):
        raise ValueError("all block exponents must be >= 1")
    params = {"s": s, "a": list(a), "b": list(b), "m": m}

    w0 = WordSum.one()
    for ai, bi in zip(a, b):
        w0 = w0.concat(WordSum.word("x" * ai + "y" * bi))

    sigma_rhs = WordSum.zero()
    sigma_bar_rhs = WordSum.zero()
    for eps in _weak_compositions(m, s):
        term = WordSum.one()
        term_bar = WordSum.one()
        for ai, bi, ei in zip(a, b, eps):
            term = term.concat(x_pow(ai)).concat(x_shuffle_y(ei, bi - 1)) \
                       .concat(WordSum.word("y"))
            term_bar = term_bar.concat(WordSum.word("x")) \
                               .concat(x_shuffle_y(ai - 1, ei)).concat(y_pow(bi))
        sigma_rhs = sigma_rhs + term
        sigma_bar_rhs = sigma_bar_rhs + term_bar

    # star versions act on the S-preimage of the block word
    w0_star = maps.s_inv(w0)
    star_rhs = WordSum.zero()
    star_bar_rhs = WordSum.zero()
    for eps in _weak_compositions(m, s):
        for js in _product_ranges([bi - 1 for bi in b]):
            sign = (-1) ** sum(bl - jl - 1 for bl, jl in zip(b, js))
            coeff = sign * math.prod(
                math.comb(el + bl - jl - 1, el) for el, bl, jl in zip(eps, b, js))
            term = WordSum.one()
            for l in range(s):
                term = term.concat(x_pow(a[l])) \
                           .concat(x_shuffle_y(eps[l] + b[l] - js[l] - 1, js[l]))
                term = term.concat(neg_x_plus_y_pow(1) if l < s - 1 else WordSum.word("y"))
            star_rhs = star_rhs + term.scale(coeff)
        for js in _product_ranges([ei for ei in eps]):
            sign = (-1) ** sum(el - jl for el, jl in zip(eps, js))
            coeff = sign * math.prod(
                math.comb(al + el - jl - 1, al - 1) for al, el, jl in zip(a, eps, js))
            term = WordSum.one()
            for l in range(s):
                term = term.concat(WordSum.word("x")) \
                           .concat(x_shuffle_y(a[l] + eps[l] - js[l] - 1, js[l]))
                if l < s - 1:
                    term = term.concat(neg_x_plus_y_pow(b[l]))
                else:
                    term = term.concat(neg_x_plus_y_pow(b[l] - 1)).concat(WordSum.word("y"))
            star_bar_rhs = star_bar_rhs + term.scale(coeff)

    sym = VerificationTask("eie-restricted", params, "symbolic", [
        ("weight-raising operator vs block display", maps.ohno_sigma(m, w0), sigma_rhs),
        ("conjugated operator vs block display", maps.ohno_sigma_bar(m, w0), sigma_bar_rhs),
        ("star operator vs block display", maps.ohno_sigma_star(m, w0_star), star_rhs),
        ("star conjugated operator vs block display",
         maps.ohno_sigma_bar_star(m, w0_star), star_bar_rhs),
    ])
    candidate = maps.ohno_sigma(m, w0) - maps.ohno_sigma_bar(m, w0)
    tasks = [sym]
    if m >= 1:
        tasks.append(VerificationTask("eie-restricted", params, "membership",
                                      [("restricted sum relation", candidate)]))
    return tasks


def _product_ranges(upper_bounds):
    """Cartesian product of ranges 0..u inclusive for each bound u."""
    if not upper_bounds:
        yield ()
        return
    for v in range(upper_bounds[0] + 1):
        for rest in _product_ranges(upper_bounds[1:]):
            yield (v,) + rest


def parity_double(kind: str, k: int | None = None, r: int | None = None,
                  s: int | None = None, star: bool = False) -> list[VerificationTask]:
    kind = kind.upper()
    if kind == "EULER_DECOMP":
        if not (r and s and r >= 1 and s >= 1):
            raise ValueError("EULER_DECOMP needs r, s >= 1")
        rhs = WordSum.zero()
        for i in range(r, r + s):
            rhs = rhs + zw(i, r + s - i).scale(math.comb(i - 1, r - 1))
        for i in range(s, r + s):
            rhs = rhs + zw(i, r + s - i).scale(math.comb(i - 1, s - 1))
        if star:
            lhs = products.star_shuffle(zw(r), zw(s))
            rhs = rhs - zw(r + s).scale(math.comb(r + s, r))
        else:
            lhs = products.shuffle(zw(r), zw(s))
        return [VerificationTask("parity:euler", {"r": r, "s": s, "star": star},
                                 "symbolic", [("depth-1 product expansion", lhs, rhs)])]

    if kind in ("EVEN_SUM", "ODD_SUM", "ALT_SUM", "STAR_EVEN", "STAR_ODD"):
        if k is None or k < 4 or k % 2:
            raise ParityMismatch("these sums need an even weight k >= 4")
        star_kind = kind.startswith("STAR")
        value = numerics.mzv_star if star_kind else numerics.mzv
        if kind == "EVEN_SUM":
            sel, q = (lambda i: i % 2 == 0), Fraction(3, 4)
        elif kind == "ODD_SUM":
            sel, q = (lambda i: i % 2 == 1), Fraction(1, 4)
        elif kind == "STAR_EVEN":
            sel, q = (lambda i: i % 2 == 0), Fraction(2 * k - 1, 4)
        elif kind == "STAR_ODD":
            sel, q = (lambda i: i % 2 == 1), Fraction(2 * k - 3, 4)
        else:
            sel, q = (lambda i: True), Fraction(1, 2)

        def lhs_fn(digits, sel=sel, value=value):
            total = 0
            for i in range(2, k):
                if sel(i):
                    sign = (-1) ** i if kind == "ALT_SUM" else 1
                    total += sign * value((i, k - i), digits)
            return total

        def rhs_fn(digits, q=q):
            return numerics.zeta(k, digits) * q.numerator / q.denominator

        name = f"parity:{kind.lower().replace('_sum', '').replace('star_', 'star-')}"
        tasks = [VerificationTask(name, {"k": k}, "numeric",
                                  [("restricted double sum", lhs_fn, rhs_fn)])]
        if kind == "ALT_SUM":
            cand = WordSum.zero()
            for i in range(2, k):
                cand = cand + zw(i, k - i).scale((-1) ** i)
            cand = cand - zw(k).scale(Fraction(1, 2))
            tasks.append(VerificationTask(name, {"k": k}, "membership",
                                          [("alternating relation", cand)]))
        return tasks

    if kind == "ODD_WEIGHT_CLOSED":
        if not (r and s and r + s >= 3 and (r + s) % 2 == 1 and r >= 2 and s >= 2):
            raise ParityMismatch("needs r, s >= 2 with odd weight r + s")
        k = r + s

        def lhs_fn(digits):
            fn = numerics.mzv_star if star else numerics.mzv
            return fn((r, s), digits)

        def rhs_fn(digits):
            z = lambda n: numerics.zeta(n, digits)
            total = ((-1) ** r + 1) / 2 * z(r) * z(s)
            for i in range(r, k - 1):
                if i % 2 == 1:
                    total -= (-1) ** r * math.comb(i - 1, r - 1) * z(i) * z(k - i)
            for i in range(s, k - 1):
                if i % 2 == 1:
                    total -= (-1) ** r * math.comb(i - 1, s - 1) * z(i) * z(k - i)
            extra = 1 if star else -1
            total += Fraction(1, 2) * ((-1) ** r * math.comb(k, r) + extra) * z(k)
            return total

        return [VerificationTask("parity:odd-weight", {"r": r, "s": s, "star": star},
                                 "numeric", [("odd-weight double zeta", lhs_fn, rhs_fn)])]

    if kind == "K1_CLOSED":
        if k is None or k < 3 or k % 2 == 0:
            raise ParityMismatch("needs odd k >= 3")

        def lhs_fn(digits):
            fn = numerics.mzv_star if star else numerics.mzv
            return fn((k - 1, 1), digits)

        def rhs_fn(digits):
            z = lambda n: numerics.zeta(n, digits)
            total = Fraction(k + 1 if star else k - 1, 2) * z(k)
            for i in range(3, k - 1, 2):
                total -= z(i) * z(k - i)
            return total

        return [VerificationTask("parity:k1", {"k": k, "star": star}, "numeric",
                                 [("trailing-one double zeta", lhs_fn, rhs_fn)])]

    raise ValueError(f"unknown parity kind {kind!r}")


class ParityMismatch(ValueError):
    """Parameter parity does not fit the requested identity."""


def sigma_lemma(k: int, n: int) -> list[VerificationTask]:
    """The operator identities behind the sum formula, for k > n >= 1."""
    if not (k > n >= 1):
        raise ValueError("need k > n >= 1")
    z = zw(k - n + 1)
    checks = []
    skn = s_kn(k, n)
    checks.append((
        "bar-minus-plain operator gives the depth slice",
        maps.ohno_sigma_bar(n - 1, z) - maps.ohno_sigma(n - 1, z),
        skn - zw(k),
    ))
    star_rhs = WordSum.zero()
    for i in range(1, n + 1):
        star_rhs = star_rhs + s_kn(k, i).scale((-1) ** (n - i) * math.comb(k - i - 1, n - i))
    checks.append((
        "star operators give alternating slice sum",
        maps.ohno_sigma_bar_star(n - 1, z) - maps.ohno_sigma_star(n - 1, z),
        star_rhs - zw(k),
    ))
    lhs_sum = WordSum.zero()
    for m in range(1, n + 1):
        zm = zw(k - m + 1)
        lhs_sum = lhs_sum + (maps.ohno_sigma_bar_star(m - 1, zm)
                             - maps.ohno_sigma_star(m - 1, zm)).scale(math.comb(k - m - 1, n - m))
    checks.append((
        "binomial star aggregate",
        lhs_sum,
        skn - zw(k).scale(math.comb(k - 1, n - 1)),
    ))
    if n >= 2:
        checks.append((
            "regularized power product",
            regularization.reg(products.stuffle(y_pow(n - 1), zw(k - n + 1)),
                               "shuffle").scale((-1) ** (n - 1)),
            skn - s_kn(k, n - 1),
        ))
    return [VerificationTask("sigma-lemma", {"k": k, "n": n}, "symbolic", checks)]


def ab_insertion(a: int, b: int, n: int, star: bool = False) -> list[VerificationTask]:
    """Alternating z_{b+ma} products against middle insertions of z_b."""
    if a < 1 or b < 1 or n < 1:
        raise ValueError("need a, b, n >= 1")
    za = zw(a)
    rhs = WordSum.zero()
    for m in range(n):
        mid = WordSum.one()
        for _ in range(m):
            mid = mid.concat(za)
        mid = mid.concat(zw(b))
        for _ in range(n - 1 - m):
            mid = mid.concat(za)
        rhs = rhs + mid
    lhs = WordSum.zero()
    for m in range(n):
        power = _concat_power(za, n - 1 - m)
        if star:
            lhs = lhs + products.star_stuffle(zw(b + m * a), power)
        else:
            lhs = lhs + products.stuffle(zw(b + m * a), power).scale((-1) ** m)
    return [VerificationTask("ab-insertion", {"a": a, "b": b, "n": n, "star": star},
                             "symbolic", [("insertion identity", lhs, rhs)])]


def _concat_power(ws: WordSum, n: int) -> WordSum:
    out = WordSum.one()
    for _ in range(n):
        out = out.concat(ws)
    return out


# -- generating-function identities on power series over word sums -------------------

def _series_E(a: int, trunc: int, ring) -> TruncatedSeries:
    return TruncatedSeries(ring, 1, trunc,
                           {(j,): _concat_power(zw(a), j) for j in range(trunc + 1)})


def _series_E_neg(a: int, trunc: int, ring) -> TruncatedSeries:
    return TruncatedSeries(ring, 1, trunc,
                           {(j,): _concat_power(zw(a), j).scale((-1) ** j)
                            for j in range(trunc + 1)})


def _series_map(series: TruncatedSeries, f) -> TruncatedSeries:
    return TruncatedSeries(series.ring, series.nvars, series.trunc,
                           {e: f(c) for e, c in series.terms.items()})


def _series_P(a: int, trunc: int, ring) -> TruncatedSeries:
    return TruncatedSeries(ring, 1, trunc,
                           {(j,): zw(a * (j + 1)) for j in range(trunc + 1)})


def n_sum(a: int, k: int, n: int) -> WordSum:
    """Sum of z_{a k_1} ... z_{a k_n} over compositions of k into n parts."""
    out = WordSum.zero()
    for comp in compositions(k, n):
        out = out + zw(*(a * c for c in comp))
    return out


def hoffman_restricted(item: str, a: int, k: int | None = None,
                       n: int | None = None, m: int | None = None,
                       degree: int = 4) -> list[VerificationTask]:
    item = item.upper()
    ring_ast = word_ring(products.stuffle)
    ring_sast = word_ring(products.star_stuffle)
    params = {"item": item, "a": a, "k": k, "n": n, "m": m, "degree": degree}
    name = f"hoffman-restricted:{item.lower().replace('_', '-')}"
    checks = []

    if item == "E_H_INVERSE":
        one = TruncatedSeries.one(ring_ast, 1, degree)
        e_neg = _series_E_neg(a, degree, ring_ast)
        h = _series_map(_series_E(a, degree, ring_ast), maps.s_map)
        prod = e_neg * h
        checks.append(("ordinary inverse pair", _series_residue(prod, one)))
        hbar_neg = _series_map(_series_E_neg(a, degree, ring_sast), maps.s_inv)
        e = _series_E(a, degree, ring_sast)
        prod2 = hbar_neg * e
        one2 = TruncatedSeries.one(ring_sast, 1, degree)
        checks.append(("star inverse pair", _series_residue(prod2, one2)))

    elif item == "P_RELATIONS":
        e_neg = _series_E_neg(a, degree + 1, ring_ast)
        h = _series_map(_series_E(a, degree + 1, ring_ast), maps.s_map)
        p = _series_P(a, degree, ring_ast)
        checks.append(("p from minus h times derivative",
                       _series_residue(p, -(h * e_neg.derivative()), degree)))
        checks.append(("p from e times h derivative",
                       _series_residue(p, e_neg * h.derivative(), degree)))
        checks.append(("e derivative",
                       _series_residue(e_neg.derivative(), -(e_neg * p), degree)))
        checks.append(("h derivative", _series_residue(h.derivative(), h * p, degree)))
        e = _series_E(a, degree + 1, ring_sast)
        hbar_neg = _series_map(_series_E_neg(a, degree + 1, ring_sast), maps.s_inv)
        p2 = _series_P(a, degree, ring_sast)
        checks.append(("star p from e and conjugate derivative",
                       _series_residue(p2, -(e * hbar_neg.derivative()), degree)))
        checks.append(("star p from conjugate and e derivative",
                       _series_residue(p2, hbar_neg * e.derivative(), degree)))
        checks.append(("star e derivative",
                       _series_residue(e.derivative(), e * p2, degree)))
        checks.append(("star conjugate derivative",
                       _series_residue(hbar_neg.derivative(), -(hbar_neg * p2), degree)))

    elif item in ("E_AST_F", "E_SAST_F", "F_AST_E"):
        trunc = 2 * degree
        star = item == "E_SAST_F"
        for check in _f_series_checks(item, a, degree, trunc, ring_ast, ring_sast):
            checks.append(check)

    elif item == "S_N":
        rhs = WordSum.zero()
        for i in range(1, n + 1):
            rhs = rhs + n_sum(a, k, i).scale(math.comb(k - i, k - n))
        checks.append(("map of the composition sum",
                       maps.s_map(n_sum(a, k, n)) - rhs))

    elif item == "S_INV_N":
        rhs = WordSum.zero()
        for i in range(1, n + 1):
            rhs = rhs + n_sum(a, k, i).scale((-1) ** (n - i) * math.comb(k - i, k - n))
        checks.append(("inverse map of the composition sum",
                       maps.s_inv(n_sum(a, k, n)) - rhs))

    elif item == "ZA_AST_N":
        total = WordSum.zero()
        for j in range(m - n + 1):
            total = total + products.stuffle(
                _concat_power(zw(a), j), n_sum(a, m - j, n)).scale((-1) ** j)
        rhs = _concat_power(zw(a), m).scale((-1) ** (m - n) * math.comb(m, n))
        checks.append(("alternating power convolution", total - rhs))

    elif item == "ZA_SAST_N":
        total = WordSum.zero()
        for j in range(m - n + 1):
            total = total + products.star_stuffle(_concat_power(zw(a), j),
                                                  n_sum(a, m - j, n))
        rhs = _concat_power(zw(a), m).scale(math.comb(m, n))
        checks.append(("star power convolution", total - rhs))

    elif item == "N_VIA_PRODUCTS":
        lhs = n_sum(a, k, n)
        rhs1 = WordSum.zero()
        rhs2 = WordSum.zero()
        for j in range(k - n + 1):
            rhs1 = rhs1 + products.stuffle(
                maps.s_map(_concat_power(zw(a), j)),
                _concat_power(zw(a), k - j)).scale((-1) ** (k - n - j) * math.comb(k - j, n))
            rhs2 = rhs2 + products.star_stuffle(
                maps.s_inv(_concat_power(zw(a), j)),
                _concat_power(zw(a), k - j)).scale((-1) ** j * math.comb(k - j, n))
        checks.append(("composition sum via plain products", lhs - rhs1))
        checks.append(("composition sum via star products", lhs - rhs2))

    else:
        raise ValueError(f"unknown item {item!r}")

    sym_checks = [(label, residue, WordSum.zero()) for label, residue in checks]
    return [VerificationTask(name, params, "symbolic", sym_checks)]


def _series_residue(lhs: TruncatedSeries, rhs: TruncatedSeries,
                    cap: int | None = None) -> WordSum:
    """Collapse a series difference into one word sum, up to total degree cap."""
    out = WordSum.zero()
    keys = set(lhs.terms) | set(rhs.terms)
    for e in keys:
        if cap is not None and sum(e) > cap:
            continue
        diff = lhs.terms.get(e, WordSum.zero()) - rhs.terms.get(e, WordSum.zero())
        if diff:
            out = out + diff
    return out


def _f_series(a: int, tdeg: int, trunc: int, ring) -> TruncatedSeries:
    terms = {(0, 0): WordSum.one()}
    for k in range(1, tdeg + 1):
        for n in range(1, k + 1):
            terms[(k, n)] = n_sum(a, k, n)
    return TruncatedSeries(ring, 2, trunc, terms)


def _e_shifted(a: int, tdeg: int, trunc: int, ring, sign: int) -> TruncatedSeries:
    # E((s - 1) t) for sign = -1, E((s + 1) t) for sign = +1
    terms = {}
    for j in range(tdeg + 1):
        base = _concat_power(zw(a), j)
        for i in range(j + 1):
            coeff = math.comb(j, i) * (sign ** (j - i))
            terms[(j, i)] = base.scale(coeff)
    return TruncatedSeries(ring, 2, trunc, terms)


def _lift_t(series: TruncatedSeries, ring, trunc: int) -> TruncatedSeries:
    return TruncatedSeries(ring, 2, trunc,
                           {(e[0], 0): c for e, c in series.terms.items()})


def _f_series_checks(item: str, a: int, degree: int, trunc: int, ring_ast, ring_sast):
    if item == "E_AST_F":
        f = _f_series(a, degree, trunc, ring_ast)
        e_neg = _lift_t(_series_E_neg(a, degree, ring_ast), ring_ast, trunc)
        lhs = _e_shifted(a, degree, trunc, ring_ast, -1)
        yield ("shifted series vs convolution",
               _series_residue_tcap(lhs, e_neg * f, degree))
    elif item == "E_SAST_F":
        f = _f_series(a, degree, trunc, ring_sast)
        e = _lift_t(_series_E(a, degree, ring_sast), ring_sast, trunc)
        lhs = _e_shifted(a, degree, trunc, ring_sast, +1)
        yield ("shifted series vs star convolution",
               _series_residue_tcap(lhs, e * f, degree))
    else:  # F_AST_E
        f = _f_series(a, degree, trunc, ring_ast)
        h = _lift_t(_series_map(_series_E(a, degree, ring_ast), maps.s_map),
                    ring_ast, trunc)
        rhs = _e_shifted(a, degree, trunc, ring_ast, -1) * h
        yield ("generating function vs plain product",
               _series_residue_tcap(f, rhs, degree))
        f2 = _f_series(a, degree, trunc, ring_sast)
        hbar_neg = _lift_t(_series_map(_series_E_neg(a, degree, ring_sast), maps.s_inv),
                           ring_sast, trunc)
        rhs2 = _e_shifted(a, degree, trunc, ring_sast, +1) * hbar_neg
        yield ("generating function vs star product",
               _series_residue_tcap(f2, rhs2, degree))


def _series_residue_tcap(lhs: TruncatedSeries, rhs: TruncatedSeries, tcap: int) -> WordSum:
    out = WordSum.zero()
    keys = {e for e in set(lhs.terms) | set(rhs.terms) if e[0] <= tcap}
    for e in keys:
        diff = lhs.terms.get(e, WordSum.zero()) - rhs.terms.get(e, WordSum.zero())
        if diff:
            out = out + diff
    return out


# -- insertion sums built on (3,1)/2 blocks ------------------------------------------

def t_insertion_words(m: int, n: int, abc=(3, 1, 2)) -> WordSum:
    """Sum over interleavings of the alternating (a,b) block with copies of c."""
    if not (m >= 2 * n >= 0):
        raise ValueError("need m >= 2n >= 0")
    a, b, c = abc
    pattern = [a if i % 2 == 0 else b for i in range(2 * n)]
    out = WordSum.zero()
    for slots in combinations(range(m), 2 * n):
        parts = [c] * m
        for pos, val in zip(slots, pattern):
            parts[pos] = val
        out = out + zw(*parts)
    return out


def tmn_insertion(m: int, n: int, abc=(3, 1, 2)) -> list[VerificationTask]:
    if not (m >= 2 * n >= 0):
        raise ValueError("need m >= 2n >= 0")
    a, b, c = abc
    if a + b != 2 * c:
        raise ValueError("need a + b = 2c")
    lhs = maps.s_map(t_insertion_words(m, n, abc))
    rhs = WordSum.zero()
    for j in range(n + 1):
        for k in range(2 * n - 2 * j + 1):
            u = 2 * n - 2 * j - k
            for i in range(2 * j, m + 1):
                rest = m - i - k - u
                if rest < 0:
                    continue
                for ell in range(rest + 1):
                    v = rest - ell
                    coeff = ((-1) ** (i + k) * math.comb(k + ell, k)
                             * math.comb(u + v, u))
                    term = products.stuffle(
                        t_insertion_words(i, j, abc),
                        products.stuffle(maps.s_map(_concat_power(zw(c), k + ell)),
                                         maps.s_map(_concat_power(zw(c), u + v))))
                    rhs = rhs + term.scale(coeff)
    return [VerificationTask("tmn-insertion", {"m": m, "n": n, "abc": list(abc)},
                             "symbolic", [("mapped insertion sum", lhs, rhs)])]


# -- Brown-Zagier block coefficients ----------------------------------------------------

def bz_coefficient(r: int, m: int, n: int, star: bool = False) -> Fraction:
    if star:
        delta = 1 if r == m else 0
        return -2 * (Fraction(math.comb(2 * r, 2 * m)) - delta
                     - (1 - Fraction(4) ** (-r)) * math.comb(2 * r, 2 * n + 1))
    return 2 * Fraction(-1) ** r * (Fraction(math.comb(2 * r, 2 * m + 2))
                                    - (1 - Fraction(4) ** (-r)) * math.comb(2 * r, 2 * n + 1))


def brown_zagier_aggregate(k: int, a: int, b: int,
                           star: bool = False) -> list[VerificationTask]:
    if k < 0 or a < 1 or b < 1:
        raise ValueError("need k >= 0 and a, b >= 1")
    za = zw(a)
    rhs = WordSum.zero()
    for n in range(k + 1):
        rhs = rhs + _concat_power(za, n).concat(zw(b)).concat(_concat_power(za, k - n))
    lhs = WordSum.zero()
    prod = products.star_stuffle if star else products.stuffle
    for n in range(k + 1):
        m = k - n
        for r in range(1, k + 2):
            coeff = bz_coefficient(r, m, n, star)
            if coeff:
                lhs = lhs + prod(zw(b + (r - 1) * a),
                                 _concat_power(za, k + 1 - r)).scale(coeff)
    return [VerificationTask("brown-zagier:aggregate",
                             {"k": k, "a": a, "b": b, "star": star}, "symbolic",
                             [("aggregated block identity", lhs, rhs)])]


def brown_zagier_conjecture(n: int, m: int, star: bool = False,
                            membership_probe: bool = False) -> list[VerificationTask]:
    if n < 0 or m < 0:
        raise ValueError("need n, m >= 0")
    k = n + m
    index = (2,) * n + (3,) + (2,) * m
    params = {"n": n, "m": m, "star": star}

    def lhs_fn(digits):
        fn = numerics.mzv_star if star else numerics.mzv
        return fn(index, digits)

    def rhs_fn(digits):
        total = 0
        for r in range(1, k + 2):
            c = bz_coefficient(r, m, n, star)
            if not c:
                continue
            tail = (2,) * (k + 1 - r)
            inner = numerics.mzv_star(tail, digits) if star else numerics.mzv(tail, digits)
            total += (numerics.zeta(2 * r + 1, digits) * inner
                      * c.numerator / c.denominator)
        return total

    tasks = [VerificationTask("brown-zagier:conjecture", params, "numeric",
                              [("interior block value", lhs_fn, rhs_fn)])]
    if membership_probe and not star:
        cand = _concat_power(zw(2), n).concat(zw(3)).concat(_concat_power(zw(2), m))
        for r in range(1, k + 2):
            c = bz_coefficient(r, m, n)
            if c:
                cand = cand - products.stuffle(
                    zw(2 * r + 1), _concat_power(zw(2), k + 1 - r)).scale(c)
        tasks.append(VerificationTask("brown-zagier:conjecture", params,
                                      "membership", [("block relation probe", cand)],
                                      experimental=True))
    return tasks


# -- the registry ------------------------------------------------------------------------

CATALOG = {
    "hoffman": hoffman_relation,
    "sum": lambda k, n: sum_formula(k, n, star=False),
    "sum-star": lambda k, n: sum_formula(k, n, star=True),
    "guo-xie:ast": lambda k, n: guo_xie(k, n, "AST"),
    "guo-xie:shuffle": lambda k, n: guo_xie(k, n, "SHUFFLE"),
    "guo-xie:s-ast": lambda k, n: guo_xie(k, n, "S_AST"),
    "guo-xie:s-shuffle": lambda k, n: guo_xie(k, n, "S_SHUFFLE"),
    "weighted": weighted_sum,
    "ohno-zudilin": ohno_zudilin,
    "eie-restricted": restricted_sum_eie,
    "parity:even": lambda k: parity_double("EVEN_SUM", k=k),
    "parity:odd": lambda k: parity_double("ODD_SUM", k=k),
    "parity:alt": lambda k: parity_double("ALT_SUM", k=k),
    "parity:star-even": lambda k: parity_double("STAR_EVEN", k=k),
    "parity:star-odd": lambda k: parity_double("STAR_ODD", k=k),
    "parity:euler": lambda r, s, star=False: parity_double("EULER_DECOMP", r=r, s=s, star=star),
    "parity:odd-weight": lambda r, s, star=False: parity_double("ODD_WEIGHT_CLOSED", r=r, s=s, star=star),
    "parity:k1": lambda k, star=False: parity_double("K1_CLOSED", k=k, star=star),
    "sigma-lemma": sigma_lemma,
    "ab-insertion": ab_insertion,
    "hoffman-restricted:e-h-inverse": lambda a, degree=4: hoffman_restricted("E_H_INVERSE", a, degree=degree),
    "hoffman-restricted:p-relations": lambda a, degree=4: hoffman_restricted("P_RELATIONS", a, degree=degree),
    "hoffman-restricted:e-ast-f": lambda a, degree=4: hoffman_restricted("E_AST_F", a, degree=degree),
    "hoffman-restricted:e-sast-f": lambda a, degree=4: hoffman_restricted("E_SAST_F", a, degree=degree),
    "hoffman-restricted:f-ast-e": lambda a, degree=4: hoffman_restricted("F_AST_E", a, degree=degree),
    "hoffman-restricted:s-n": lambda a, k, n: hoffman_restricted("S_N", a, k=k, n=n),
    "hoffman-restricted:s-inv-n": lambda a, k, n: hoffman_restricted("S_INV_N", a, k=k, n=n),
    "hoffman-restricted:za-ast-n": lambda a, m, n: hoffman_restricted("ZA_AST_N", a, m=m, n=n),
    "hoffman-restricted:za-sast-n": lambda a, m, n: hoffman_restricted("ZA_SAST_N", a, m=m, n=n),
    "hoffman-restricted:n-via-products": lambda a, k, n: hoffman_restricted("N_VIA_PRODUCTS", a, k=k, n=n),
    "tmn-insertion": tmn_insertion,
    "brown-zagier:aggregate": brown_zagier_aggregate,
    "brown-zagier:conjecture": brown_zagier_conjecture,
}


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def build(name: str, **params) -> list[VerificationTask]:
    if name not in CATALOG:
        raise ValueError(f"unknown identity {name!r}; see catalog_names()")
    return CATALOG[name](**params)

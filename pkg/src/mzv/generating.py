"""Generating-function identity checks (series coefficient comparisons).

Each check expands both sides of a power-series identity through a truncation
degree and reports the largest coefficient deviation.  Exact checks (over the
rationals or over word sums) report an exact zero-or-not flag; numeric checks
compare mpmath coefficients against a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, workdps

from . import numerics, products
from .series import TruncatedSeries, mp_ring, word_ring
from .words import WordSum


@dataclass
class GeneratingReport:
    name: str
    params: dict
    truncation: int
    digits: int | None
    max_deviation: str
    exact: bool
    passed: bool

    def as_json(self) -> dict:
        return {
            "name": self.name, "params": self.params,
            "truncation": self.truncation, "digits": self.digits,
            "max_deviation": self.max_deviation, "exact": self.exact,
            "passed": self.passed,
        }


def _report(name, params, truncation, digits, deviation, tolerance) -> GeneratingReport:
    if isinstance(deviation, Fraction):
        return GeneratingReport(name, params, truncation, None,
                                str(deviation), True, deviation == 0)
    return GeneratingReport(name, params, truncation, digits,
                            mp.nstr(deviation, 5), False, bool(deviation < tolerance))


def _concat_power(ws: WordSum, n: int) -> WordSum:
    out = WordSum.one()
    for _ in range(n):
        out = out.concat(ws)
    return out


def _z(k: int) -> WordSum:
    return WordSum.from_index((k,))


# -- individual checks -------------------------------------------------------------

def check_exp_ast(k: int, truncation: int) -> Fraction:
    """Stuffle exponential of the power sums vs the geometric word series."""
    ring = word_ring(products.stuffle)
    arg = TruncatedSeries(ring, 1, truncation, {
        (n,): _z(n * k).scale(Fraction(-1, n)) for n in range(1, truncation + 1)})
    lhs = arg.exp()
    rhs = TruncatedSeries(ring, 1, truncation, {
        (n,): _concat_power(_z(k), n).scale((-1) ** n)
        for n in range(truncation + 1)})
    worst = Fraction(0)
    for e in set(lhs.terms) | set(rhs.terms):
        diff = lhs.terms.get(e, WordSum.zero()) - rhs.terms.get(e, WordSum.zero())
        if diff:
            worst = max(worst, max(abs(c) for _, c in diff.items()))
    return worst


def check_kn_nk(k: int, truncation: int, digits: int):
    """Repeated-argument values vs the exponential of single zeta values."""
    ring = mp_ring(mp)
    lhs = TruncatedSeries(ring, 1, truncation, {
        (n,): numerics.mzv((k,) * n, digits) for n in range(truncation + 1)})
    arg = TruncatedSeries(ring, 1, truncation, {
        (n,): (-1) ** (n - 1) * numerics.zeta(n * k, digits) / n
        for n in range(1, truncation + 1)})
    return _max_series_dev(lhs, arg.exp())


def check_mzv_mzsv_inverse(k: int, truncation: int, digits: int):
    """Signed plain series times star series equals one."""
    ring = mp_ring(mp)
    plain = TruncatedSeries(ring, 1, truncation, {
        (n,): (-1) ** n * numerics.mzv((k,) * n, digits)
        for n in range(truncation + 1)})
    star = TruncatedSeries(ring, 1, truncation, {
        (n,): numerics.mzv_star((k,) * n, digits) for n in range(truncation + 1)})
    return _max_series_dev(plain * star, TruncatedSeries.one(ring, 1, truncation))


def check_reflection(truncation: int, digits: int):
    """Product of the gamma series with its mirror vs the Bernoulli closed form."""
    ring = mp_ring(mp)
    arg_plus = TruncatedSeries(ring, 1, truncation, {
        (n,): (-1) ** n * numerics.zeta(n, digits) / n
        for n in range(2, truncation + 1)})
    arg_minus = TruncatedSeries(ring, 1, truncation, {
        (n,): numerics.zeta(n, digits) / n for n in range(2, truncation + 1)})
    lhs = arg_plus.exp() * arg_minus.exp()
    lam2 = -4 * mp.pi ** 2
    rhs_terms = {}
    for n in range(0, truncation // 2 + 1):
        b = numerics.bernoulli(2 * n)
        beta = (mp.mpf(2) ** (1 - 2 * n) - 1) * b.numerator / b.denominator \
            / math.factorial(2 * n)
        rhs_terms[(2 * n,)] = beta * lam2 ** n
    rhs = TruncatedSeries(ring, 1, truncation, rhs_terms)
    return _max_series_dev(lhs, rhs)


def check_gen_2k(k: int, truncation: int, digits: int):
    """Alternating repeated-2k series vs the product over rotated sinh factors."""
    lam = 2j * mp.pi  # lambda = 2 pi sqrt(-1); only even powers survive
    ring = mp_ring(mp)
    lhs_terms = {}
    n = 0
    while 2 * n * k <= truncation:
        lhs_terms[(2 * n * k,)] = mp.mpc((-1) ** n * numerics.mzv((2 * k,) * n, digits))
        n += 1
    lhs = TruncatedSeries(ring, 1, truncation, lhs_terms)
    rhs = TruncatedSeries.one(ring, 1, truncation)
    for j in range(k):
        rho_j = mp.expjpi(mp.mpf(j) / k)
        base = (lam * rho_j) ** 2
        factor_terms = {}
        for m in range(truncation // 2 + 1):
            factor_terms[(2 * m,)] = base ** m / (mp.mpf(4) ** m
                                                  * math.factorial(2 * m + 1))
        rhs = rhs * TruncatedSeries(ring, 1, truncation, factor_terms)
    # the product only has even-degree terms matching multiples of 2k
    return _max_series_dev(lhs, rhs)


def check_ohno_zagier(truncation: int, digits: int):
    """Weight/depth/height generating function vs its exponential closed form.

    The closed form carries a 1/(uv - t) prefactor; we expand the bracket
    B = 1 - exp(...) in u, v, t, recover the quotient coefficientwise through
    G[a,b,c] = -sum_i B[a-i, b-i, c+1+i], and compare against the direct
    admissible-index sums for every weight <= truncation.
    """
    ring = mp_ring(mp)
    deg = truncation + 1
    u = TruncatedSeries.variable(ring, 3, deg, 0)
    v = TruncatedSeries.variable(ring, 3, deg, 1)
    t = TruncatedSeries.variable(ring, 3, deg, 2)
    # Newton recursion for alpha^n + beta^n with alpha+beta = u+v, alpha beta = t
    p_prev = TruncatedSeries.const(ring, 3, deg, mp.mpf(2))
    p_cur = u + v
    arg = TruncatedSeries.zero(ring, 3, deg)
    for n in range(2, deg + 1):
        p_next = (u + v) * p_cur - t * p_prev
        p_prev, p_cur = p_cur, p_next
        un = TruncatedSeries(ring, 3, deg, {(n, 0, 0): mp.mpf(1), (0, n, 0): mp.mpf(1)})
        arg = arg + (un - p_cur).scale_elem(numerics.zeta(n, digits) / n)
    bracket = TruncatedSeries.one(ring, 3, deg) - arg.exp()

    def g_coeff(a, b, c):
        total = mp.mpf(0)
        for i in range(min(a, b) + 1):
            total -= bracket.coeff((a - i, b - i, c + 1 + i))
        return total

    worst = mp.mpf(0)
    for k in range(2, truncation + 1):
        for n in range(1, k + 1):
            for s in range(1, n + 1):
                if k < n + s:
                    continue
                direct = numerics.x0_sum(k, n, s, digits)
                derived = g_coeff(k - n - s, n - s, s - 1)
                worst = max(worst, abs(direct - derived))
    return worst


def check_aomoto(truncation: int, digits: int):
    """Height-one tails: zeta(m+1, {1}^(n-1)) coefficients vs the closed form."""
    ring = mp_ring(mp)
    lhs_terms = {}
    for m_ in range(1, truncation):
        for n_ in range(1, truncation - m_ + 1):
            idx = (m_ + 1,) + (1,) * (n_ - 1)
            lhs_terms[(m_, n_)] = numerics.mzv(idx, digits)
    lhs = TruncatedSeries(ring, 2, truncation, lhs_terms)
    u = TruncatedSeries.variable(ring, 2, truncation, 0)
    v = TruncatedSeries.variable(ring, 2, truncation, 1)
    upv = u + v
    upv_pow = upv * upv
    arg = TruncatedSeries.zero(ring, 2, truncation)
    for j in range(2, truncation + 1):
        un = TruncatedSeries(ring, 2, truncation,
                             {(j, 0): mp.mpf(1), (0, j): mp.mpf(1)})
        arg = arg + (un - upv_pow).scale_elem(numerics.zeta(j, digits) / j)
        upv_pow = upv_pow * upv
    rhs = TruncatedSeries.one(ring, 2, truncation) - arg.exp()
    return _max_series_dev(lhs, rhs)


def check_le_murakami_split(weight: int, digits: int):
    """Odd-weight alternating height sums all vanish."""
    if weight % 2 == 0 or weight < 3:
        raise ValueError("needs an odd weight >= 3")
    worst = mp.mpf(0)
    for s in range(1, weight // 2 + 1):
        worst = max(worst, abs(numerics.height_alternating_sum(weight, s, digits)))
    return worst


def check_g_over_f(truncation: int) -> Fraction:
    """cosh-type over sinh-type series equals -4 sum zeta(2n) t^n, exactly.

    Writing both sides with the powers of pi^2 factored out of t^n leaves an
    identity between rational sequences.
    """
    g = [Fraction(2 * (-1) ** n, math.factorial(2 * n)) for n in range(truncation + 1)]
    f = [Fraction((-1) ** n, math.factorial(2 * n + 1)) for n in range(truncation + 1)]
    zq = [numerics.zeta_2n(n).q for n in range(truncation + 1)]
    worst = Fraction(0)
    for big_n in range(truncation + 1):
        conv = sum(-4 * zq[n] * f[big_n - n] for n in range(big_n + 1))
        worst = max(worst, abs(g[big_n] - conv))
    return worst


def check_bernoulli_corollary(truncation: int) -> Fraction:
    """Triple convolution of halved Bernoulli weights collapses to one term."""
    worst = Fraction(0)
    for n in range(truncation + 1):
        total = Fraction(0)
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                bj, bk = numerics.bernoulli(2 * j), numerics.bernoulli(2 * k)
                total += ((Fraction(2) ** (1 - 2 * j) - 1) * (Fraction(2) ** (1 - 2 * k) - 1)
                          * bj * bk
                          / (Fraction(4) ** i * math.factorial(2 * i + 1)
                             * math.factorial(2 * j) * math.factorial(2 * k)))
        rhs = (Fraction(2) ** (1 - 2 * n) - 1) * numerics.bernoulli(2 * n) \
            / math.factorial(2 * n)
        worst = max(worst, abs(total - rhs))
    return worst


def _max_series_dev(a: TruncatedSeries, b: TruncatedSeries):
    keys = set(a.terms) | set(b.terms)
    worst = mp.mpf(0)
    zero = mp.mpf(0)
    for e in keys:
        worst = max(worst, abs(a.terms.get(e, zero) - b.terms.get(e, zero)))
    return worst


GENERATING_CHECKS = {
    "exp_ast": (check_exp_ast, ("k",), True),
    "kn_nk": (check_kn_nk, ("k",), False),
    "mzv_mzsv_inverse": (check_mzv_mzsv_inverse, ("k",), False),
    "reflection": (check_reflection, (), False),
    "gen_2k": (check_gen_2k, ("k",), False),
    "ohno_zagier": (check_ohno_zagier, (), False),
    "aomoto": (check_aomoto, (), False),
    "le_murakami_split": (check_le_murakami_split, ("weight",), False),
    "g_over_f": (check_g_over_f, (), True),
    "bernoulli_corollary": (check_bernoulli_corollary, (), True),
}


def generating_check(name: str, truncation: int, digits: int = 40,
                     tolerance=None, **params) -> GeneratingReport:
    """Run one named generating-function check and report the worst deviation."""
    if name not in GENERATING_CHECKS:
        raise ValueError(f"unknown generating check {name!r}")
    fn, keys, exact = GENERATING_CHECKS[name]
    for key in keys:
        if key not in params:
            raise ValueError(f"{name} needs parameter {key!r}")
    if exact:
        if name == "exp_ast":
            dev = fn(params["k"], truncation)
        else:
            dev = fn(truncation)
        return _report(name, params, truncation, None, dev, None)
    with workdps(digits + numerics.GUARD_DIGITS):
        if tolerance is None:
            tolerance = mp.mpf(10) ** (-(digits - 10))
        else:
            tolerance = mp.mpf(str(tolerance)) if not isinstance(tolerance, (int, float)) \
                else mp.mpf(tolerance)
        if name == "le_murakami_split":
            dev = fn(params["weight"], digits)
        elif keys:
            dev = fn(params["k"], truncation, digits)
        else:
            dev = fn(truncation, digits)
        return _report(name, params, truncation, digits, dev, tolerance)

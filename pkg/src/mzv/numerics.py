"""High-precision evaluation of multiple zeta values and the closed forms.

Evaluation strategy: a multiple zeta value is an iterated integral over the
unit simplex.  Cutting the integration path at 1/2 and reflecting the upper
half (t -> 1-t swaps the two one-forms and reverses the word) turns the value
into a finite sum of products of multiple polylogarithms at 1/2:

    zeta(w) = sum over splittings w = u v of  Li(tau(u); 1/2) * Li(v; 1/2),

where tau reverses the word and swaps x <-> y.  Every polylogarithm series at
1/2 converges geometrically with ratio 1/2, so truncating after N terms leaves
an error below roughly 2^-N; we take N = 3.33 * working_digits + 64 and work
with 15 guard digits.  A slower direct-summation fallback with an
Euler-Maclaurin outer tail is provided for cross-validation.

The closed-form evaluators return exact rational multiples of powers of pi
(:class:`PiPower`) whenever the underlying formula is rational in pi^2; the
root-of-unity formulas go through complex arithmetic followed by rational
reconstruction with a bounded denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, workdps

from . import maps
from .config import get_config
from .regularization import PrecisionExhausted
from .words import (
    NotAdmissible,
    WordSum,
    enumerate_indices,
    index_to_word,
    is_admissible,
    word_to_index,
)

GUARD_DIGITS = 15


# -- Bernoulli numbers --------------------------------------------------------

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention), via the recurrence
    sum_j C(n+1, j) B_j = 0 with B_0 = 1; values are cached."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


# -- exact pi-power values ------------------------------------------------------

@dataclass(frozen=True)
class PiPower:
    """An exact value q * pi^power."""

    q: Fraction
    power: int

    def value(self, digits: int = 40):
        with workdps(digits + GUARD_DIGITS):
            return (mp.pi ** self.power) * self.q.numerator / self.q.denominator

    def __add__(self, other: "PiPower") -> "PiPower":
        if self.power != other.power and self.q and other.q:
            raise ValueError("cannot add different pi powers exactly")
        power = self.power if self.q else other.power
        return PiPower(self.q + other.q, power)

    def scale(self, c) -> "PiPower":
        return PiPower(self.q * Fraction(c), self.power)

    def __str__(self) -> str:
        if self.power == 0 or self.q == 0:
            return str(self.q)
        return f"{self.q} * pi^{self.power}"


def _work_dps(digits: int) -> int:
    cap = get_config()["digits_cap"]
    if digits > cap:
        raise PrecisionExhausted(f"requested {digits} digits, cap is {cap}")
    return digits + GUARD_DIGITS


# -- polylogarithms at one half and the path-splitting evaluation ----------------

def _composition_of(word: str) -> tuple[int, ...]:
    # like word_to_index but allows a leading run of y letters (parts of 1)
    return word_to_index(word)


@lru_cache(maxsize=None)
def _li_half(comp: tuple[int, ...], prec_dps: int):
    """Li_{comp}(1/2) with all parts >= 1; geometric convergence ratio 1/2."""
    with workdps(prec_dps):
        d = len(comp)
        if d == 0:
            return mp.mpf(1)
        n_terms = int(prec_dps * 3.33) + 64
        # inner[M] = sum over M >= n_i > ... > n_d >= 1 of prod n_j^-s_j
        inner = [mp.mpf(1)] * (n_terms + 1)
        for level in range(d - 1, 0, -1):
            s = comp[level]
            nxt = [mp.mpf(0)] * (n_terms + 1)
            acc = mp.mpf(0)
            for m in range(1, n_terms + 1):
                acc += inner[m - 1] / mp.mpf(m) ** s
                nxt[m] = acc
            inner = nxt
        total = mp.mpf(0)
        half_pow = mp.mpf(1)
        s1 = comp[0]
        for n in range(1, n_terms + 1):
            half_pow /= 2
            total += half_pow * inner[n - 1] / mp.mpf(n) ** s1
        return total


def _tau_word(w: str) -> str:
    return maps.tau_word(w)


@lru_cache(maxsize=None)
def _mzv_word(word: str, prec_dps: int):
    """Value of an admissible word by splitting the integration path at 1/2."""
    with workdps(prec_dps):
        k = len(word)
        total = mp.mpf(0)
        for j in range(k + 1):
            upper, lower = word[:j], word[j:]
            left = _li_half(_composition_of(_tau_word(upper)), prec_dps) if upper else mp.mpf(1)
            right = _li_half(_composition_of(lower), prec_dps) if lower else mp.mpf(1)
            total += left * right
        return total


def mzv(index, digits: int = 40):
    """Multiple zeta value of an admissible index, to ``digits`` digits."""
    index = tuple(index)
    if not is_admissible(index):
        raise NotAdmissible(f"index {index} is not admissible")
    if not index:
        return mp.mpf(1)
    return _mzv_word(index_to_word(index), _work_dps(digits))


def mzv_star(index, digits: int = 40):
    """Multiple zeta-star value, evaluated as the plain value of the S-image."""
    index = tuple(index)
    if not is_admissible(index):
        raise NotAdmissible(f"index {index} is not admissible")
    if not index:
        return mp.mpf(1)
    return evaluate_word_sum(maps.s_map(WordSum.from_index(index)), digits)


def evaluate_word_sum(ws: WordSum, digits: int = 40):
    """Linear extension of :func:`mzv` to h0-supported word sums."""
    prec = _work_dps(digits)
    with workdps(prec):
        total = mp.mpf(0)
        for w, c in ws.items():
            total += _mzv_word(w, prec) * c.numerator / c.denominator
        return total


def evaluate_star_word_sum(ws: WordSum, digits: int = 40):
    """Value of Z* on an h0 word sum: evaluate the S-image."""
    return evaluate_word_sum(maps.s_map(ws), digits)


def zeta(n: int, digits: int = 40):
    """Riemann zeta at an integer >= 2 (library-backed scalar)."""
    with workdps(_work_dps(digits)):
        return +mp.zeta(n)


# -- direct-summation fallback ---------------------------------------------------

def mzv_series(index, digits: int = 15, terms: int = 100_000):
    """Truncated nested summation with an Euler-Maclaurin outer tail.

    Cross-validation fallback for indices with all parts >= 2.  At depth one
    the Euler-Maclaurin expansion makes the tail essentially exact; at depth
    two and more the inner sums are frozen at their limits inside the tail,
    which leaves an error of roughly terms^(2 - k1 - k2).  Use it to confirm
    the path-splitting evaluator at moderate accuracy, not to replace it.
    """
    index = tuple(index)
    if not index or any(k < 2 for k in index):
        raise ValueError("series fallback needs all parts >= 2")
    prec = digits + GUARD_DIGITS
    with workdps(prec):
        d = len(index)
        inner = [mp.mpf(1)] * (terms + 1)
        for level in range(d - 1, 0, -1):
            s = index[level]
            acc = mp.mpf(0)
            nxt = [mp.mpf(0)] * (terms + 1)
            for m in range(1, terms + 1):
                acc += inner[m - 1] / mp.mpf(m) ** s
                nxt[m] = acc
            inner = nxt
        partial = mp.mpf(0)
        s1 = index[0]
        for n in range(1, terms + 1):
            partial += inner[n - 1] / mp.mpf(n) ** s1
        # frozen tail: remaining inner sums approximated by their limits
        tail_inner = mzv(index[1:], digits) if d > 1 else mp.mpf(1)
        partial += tail_inner * _zeta_tail(s1, terms, prec)
        return partial


def _zeta_tail(s: int, big_m: int, prec: int):
    """Euler-Maclaurin expansion of sum_{m > M} m^-s."""
    with workdps(prec):
        m_ = mp.mpf(big_m)
        out = m_ ** (1 - s) / (s - 1) - m_ ** (-s) / 2
        factor = mp.mpf(s)
        m_pow = m_ ** (-s - 1)
        for j in range(1, 9):
            b = bernoulli(2 * j)
            out += m_pow * factor * b.numerator / b.denominator / math.factorial(2 * j)
            factor *= (s + 2 * j - 1) * (s + 2 * j)
            m_pow /= m_ * m_
        return out


# -- rational reconstruction ------------------------------------------------------

def recognize_rational(x, max_denominator: int | None = None,
                       tol=None) -> Fraction | None:
    """Round a high-precision real to a bounded-denominator rational, or None.

    The default tolerance scales with the ambient working precision; a
    generic irrational sits no closer than about bound^-2 to any admissible
    rational, so a tolerance far below that rejects it.
    """
    if max_denominator is None:
        max_denominator = get_config()["rational_denominator_bound"]
    if tol is None:
        tol = mp.mpf(10) ** (-(mp.dps - 8))
    shift = mp.prec + 60
    scaled = int(mp.floor(x * mp.mpf(2) ** shift + mp.mpf("0.5")))
    cand = Fraction(scaled, 2 ** shift).limit_denominator(max_denominator)
    if abs(x - mp.mpf(cand.numerator) / cand.denominator) < tol:
        return cand
    return None


def recognize_pi_power(x, power: int, digits: int = 40,
                       max_denominator: int | None = None) -> PiPower | None:
    """Identify x as q * pi^power with bounded denominator, or None."""
    with workdps(digits + GUARD_DIGITS):
        q = recognize_rational(x / mp.pi ** power, max_denominator)
    return PiPower(q, power) if q is not None else None


# -- closed-form evaluators ---------------------------------------------------------

def _fact(n: int) -> int:
    return math.factorial(n)


def zeta_2n(n: int) -> PiPower:
    """zeta(2n) as an exact pi-power; n = 0 gives the convention -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q = -Fraction(-4) ** n * bernoulli(2 * n) / (2 * _fact(2 * n))
    return PiPower(q, 2 * n)


def z2_n(n: int) -> PiPower:
    """zeta({2}^n) = pi^(2n) / (2n+1)!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PiPower(Fraction(1, _fact(2 * n + 1)), 2 * n)


def zs2_n(n: int) -> PiPower:
    """zeta*({2}^n) = 2 (1 - 2^(1-2n)) zeta(2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return zeta_2n(n).scale(2 * (1 - Fraction(2) ** (1 - 2 * n)))


def _c_recursive(k: int, n: int, star: bool) -> Fraction:
    key = (k, n, star)
    if key in _C_CACHE:
        return _C_CACHE[key]
    if n == 0:
        val = Fraction(1)
    else:
        acc = Fraction(0)
        for m in range(1, n + 1):
            term = math.comb(2 * n * k, 2 * m * k) * bernoulli(2 * m * k) \
                * _c_recursive(k, n - m, star)
            acc += term if star else (-1) ** m * term
        val = (-acc if star else acc) / (2 * n)
    _C_CACHE[key] = val
    return val


_C_CACHE: dict = {}


def z2k_n_recursive(k: int, n: int) -> PiPower:
    """zeta({2k}^n) via the rational recursion for the (2nk)!-normalized constant."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    q = _c_recursive(k, n, star=False) * Fraction(-4) ** (n * k) / _fact(2 * n * k)
    return PiPower(q, 2 * n * k)


def zs2k_n_recursive(k: int, n: int) -> PiPower:
    """zeta*({2k}^n) via the companion recursion."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    q = _c_recursive(k, n, star=True) * Fraction(-4) ** (n * k) / _fact(2 * n * k)
    return PiPower(q, 2 * n * k)


def z4_n(n: int) -> PiPower:
    """zeta({4}^n) = 2^(2n+1) pi^(4n) / (4n+2)!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PiPower(Fraction(2 ** (2 * n + 1), _fact(4 * n + 2)), 4 * n)


def z31_n(n: int) -> PiPower:
    """zeta({3,1}^n) = 2 pi^(4n) / (4n+2)!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PiPower(Fraction(2, _fact(4 * n + 2)), 4 * n)


def tmn(m: int, n: int) -> PiPower:
    """Value of the insertion sum T_{m,n} built on (3,1)/2 blocks:
    2 C(m+1, 2n+1) pi^(2m) / (2m+2)!."""
    if not (m >= 2 * n >= 0):
        raise ValueError("need m >= 2n >= 0")
    return PiPower(Fraction(2 * math.comb(m + 1, 2 * n + 1), _fact(2 * m + 2)), 2 * m)


def _beta(k: int) -> Fraction:
    return (Fraction(2) ** (1 - 2 * k) - 1) * bernoulli(2 * k) / _fact(2 * k)


def zs_tmn(m: int, n: int) -> PiPower:
    """Star value of the T_{m,n} insertion sum (exact pi-power)."""
    if not (m >= 2 * n >= 0):
        raise ValueError("need m >= 2n >= 0")
    q = Fraction(0)
    for j in range(n + 1):
        for k in range(2 * n - 2 * j + 1):
            u = 2 * n - 2 * j - k
            for i in range(2 * j, m + 1):
                rest = m - i - k - u
                if rest < 0:
                    continue
                for ell in range(rest + 1):
                    v = rest - ell
                    q += ((-1) ** k * math.comb(k + ell, k) * math.comb(u + v, u)
                          * math.comb(i + 1, 2 * j + 1)
                          * _beta(k + ell) * _beta(u + v)
                          * Fraction(2, 4 ** i) / _fact(2 * i + 2))
    return PiPower(q * Fraction(-4) ** m, 2 * m)


def le_murakami(k: int, s: int) -> PiPower:
    """Depth-alternating height sum at even weight 2k and height s."""
    if not (k >= s >= 1):
        raise ValueError("need k >= s >= 1")
    acc = Fraction(0)
    for n in range(k - s + 1):
        acc += math.comb(2 * k + 1, 2 * n) * (2 - Fraction(2) ** (2 * n)) * bernoulli(2 * n)
    q = Fraction(-1) ** k * acc / _fact(2 * k + 1)
    return PiPower(q, 2 * k)


def res_hoffman(k: int, n: int, star: bool = False) -> PiPower:
    """Restricted sum of zeta(2k_1, ..., 2k_n) over compositions of k (exact)."""
    if not (k >= n >= 1):
        raise ValueError("need k >= n >= 1")
    acc = Fraction(0)
    if star:
        for j in range(n, k + 1):
            acc += (math.comb(j, n) * math.comb(2 * k + 1, 2 * j)
                    * (2 - Fraction(4) ** j) * bernoulli(2 * j))
        sign = Fraction(1)
    else:
        for j in range(k - n + 1):
            acc += (math.comb(k - j, n) * math.comb(2 * k + 1, 2 * j)
                    * (2 - Fraction(4) ** j) * bernoulli(2 * j))
        sign = Fraction(-1) ** n
    q = sign * Fraction(-1) ** k * acc / _fact(2 * k + 1)
    return PiPower(q, 2 * k)


def res_two_forms(k: int, n: int) -> tuple[PiPower, PiPower]:
    """The two displayed closed forms of the depth-n restricted even sum."""
    if not (k >= n >= 1):
        raise ValueError("need k >= n >= 1")
    form1 = Fraction(0)
    for j in range((n - 1) // 2 + 1):
        form1 += (Fraction(-4) ** j / (Fraction(2 ** (2 * n - 2)) * _fact(2 * j + 1))
                  * math.comb(2 * n - 2 * j - 1, n) * zeta_2n(k - j).q)
    form2 = Fraction(math.comb(2 * n - 1, n), 2 ** (2 * n - 2)) * zeta_2n(k).q
    for j in range(1, (n - 1) // 2 + 1):
        form2 -= (Fraction(math.comb(2 * n - 2 * j - 1, n))
                  / (2 ** (2 * n - 3) * (2 * j + 1) * bernoulli(2 * j))
                  * zeta_2n(j).q * zeta_2n(k - j).q)
    return PiPower(form1, 2 * k), PiPower(form2, 2 * k)


def _rho_root(m: int):
    return mp.expjpi(mp.mpf(1) / m)


def _compositions_sum(total: int, parts: int):
    # weak compositions of `total` into `parts` parts
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_sum(total - first, parts - 1):
            yield (first,) + rest


def _z2k_roots_sum(k: int, n: int):
    """Root-of-unity sum whose value is the coefficient of lambda^(2nk)/4^(nk)."""
    rho = _rho_root(k)
    acc = mp.mpc(0)
    for comp in _compositions_sum(n * k, k):
        expo = sum(2 * j * comp[j] for j in range(k))
        denom = mp.mpf(1)
        for c in comp:
            denom *= _fact(2 * c + 1)
        acc += rho ** expo / denom
    return acc * (-1) ** n


def _zs2k_roots_sum(k: int, n: int):
    rho = _rho_root(k)
    acc = mp.mpc(0)
    for comp in _compositions_sum(n * k, k):
        expo = sum(2 * j * comp[j] for j in range(k))
        prod = mp.mpf(1)
        for c in comp:
            b = bernoulli(2 * c)
            prod *= (2 - mp.mpf(4) ** c) * b.numerator / b.denominator / _fact(2 * c)
        acc += rho ** expo * prod
    return acc


def z2k_n_roots_value(k: int, n: int, digits: int = 40):
    """zeta({2k}^n) via the root-of-unity sum, as a high-precision real."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    with workdps(_work_dps(digits)):
        return _real_part_of(_z2k_roots_sum(k, n), digits) \
            * (-4 * mp.pi ** 2) ** (n * k) / mp.mpf(4) ** (n * k)


def zs2k_n_roots_value(k: int, n: int, digits: int = 40):
    """zeta*({2k}^n) via the root-of-unity sum, as a high-precision real."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    with workdps(_work_dps(digits)):
        return _real_part_of(_zs2k_roots_sum(k, n), digits) \
            * (-4 * mp.pi ** 2) ** (n * k) / mp.mpf(4) ** (n * k)


def z2k_n_roots(k: int, n: int, digits: int = 40,
                max_denominator: int | None = None) -> PiPower:
    """zeta({2k}^n) via the root-of-unity sum; reconstructed as an exact pi-power."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    with workdps(_work_dps(digits)):
        return _reconstruct_lambda_multiple(_z2k_roots_sum(k, n), n * k, digits,
                                            max_denominator)


def zs2k_n_roots(k: int, n: int, digits: int = 40,
                 max_denominator: int | None = None) -> PiPower:
    """zeta*({2k}^n) via the root-of-unity sum; reconstructed exactly."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    with workdps(_work_dps(digits)):
        return _reconstruct_lambda_multiple(_zs2k_roots_sum(k, n), n * k, digits,
                                            max_denominator)


def _real_part_of(value, digits: int):
    tol = mp.mpf(10) ** (-(digits - 5))
    if abs(mp.im(value)) > tol:
        raise PrecisionExhausted(
            f"imaginary residue {mp.im(value)} too large; raise the precision")
    return mp.re(value)


def _reconstruct_lambda_multiple(value, half_weight: int, digits: int,
                                 max_denominator: int | None = None) -> PiPower:
    """Interpret ``value`` as q * lambda^(2w)/4^w = q (-1)^w pi^(2w); recover q.

    Flags (raises) when the imaginary part is not negligible or when no
    rational with denominator under the bound sits within tolerance.
    """
    q = recognize_rational(_real_part_of(value, digits), max_denominator)
    if q is None:
        raise PrecisionExhausted("rational reconstruction failed (raise the bound?)")
    return PiPower(q * Fraction(-1) ** half_weight, 2 * half_weight)


def res_2a(m: int, k: int, n: int, star: bool = False, digits: int = 40,
           max_denominator: int | None = None) -> PiPower:
    """Restricted sums of zeta(2m k_1, ..., 2m k_n) via the root-of-unity form."""
    if not (k >= n >= 1 and m >= 1):
        raise ValueError("need k >= n >= 1 and m >= 1")
    with workdps(_work_dps(digits)):
        rho = _rho_root(m)
        acc = mp.mpc(0)
        j_range = range(n, k + 1) if star else range(0, k - n + 1)
        for j in j_range:
            binom = math.comb(j, n) if star else math.comb(k - j, n)
            inner = mp.mpc(0)
            for ncomp in _compositions_sum(m * j, m):
                for lcomp in _compositions_sum(m * (k - j), m):
                    prod = mp.mpf(1)
                    for i in range(m):
                        b = bernoulli(2 * ncomp[i])
                        prod *= ((2 - mp.mpf(4) ** ncomp[i])
                                 * b.numerator / b.denominator
                                 / _fact(2 * ncomp[i]) / _fact(2 * lcomp[i] + 1))
                    expo = sum(2 * i * (ncomp[i] + lcomp[i]) for i in range(m))
                    inner += rho ** expo * prod
            acc += binom * inner
        if not star:
            acc *= (-1) ** n
        return _reconstruct_lambda_multiple(acc, k * m, digits, max_denominator)


CLOSED_FORMS = {
    "zeta2n": zeta_2n,
    "z2_n": z2_n,
    "zs2_n": zs2_n,
    "z2k_n": z2k_n_roots,
    "zs2k_n": zs2k_n_roots,
    "z2k_n_recursive": z2k_n_recursive,
    "zs2k_n_recursive": zs2k_n_recursive,
    "z4_n": z4_n,
    "z31_n": z31_n,
    "tmn": tmn,
    "zs_tmn": zs_tmn,
    "le_murakami": le_murakami,
    "res_hoffman": res_hoffman,
    "res_2a": res_2a,
    "res_two_forms": res_two_forms,
}


def closed_form(name: str, **params):
    if name not in CLOSED_FORMS:
        raise ValueError(f"unknown closed form {name!r}")
    return CLOSED_FORMS[name](**params)


# -- aggregate numeric sums --------------------------------------------------------

def x0_sum(k: int, n: int, s: int, digits: int = 40):
    """Sum of zeta over admissible indices with weight k, depth n, height s."""
    if not (k >= n + s and n >= s >= 1):
        raise ValueError("need k >= n + s and n >= s >= 1")
    with workdps(_work_dps(digits)):
        total = mp.mpf(0)
        for idx in enumerate_indices(k, depth=n, height=s):
            total += mzv(idx, digits)
        return total


def height_alternating_sum(weight: int, s: int, digits: int = 40):
    """sum over admissible indices of given weight and height of
    (-1)^depth zeta(index)."""
    with workdps(_work_dps(digits)):
        total = mp.mpf(0)
        for idx in enumerate_indices(weight, height=s):
            total += (-1) ** len(idx) * mzv(idx, digits)
        return total

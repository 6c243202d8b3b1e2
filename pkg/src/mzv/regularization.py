"""Regularization: decomposing h1 elements over h0 in the four product algebras.

For each commutative product ``(.)`` among shuffle, stuffle and their star
variants, h1 is a polynomial algebra over h0 in the single generator y.  Every
w in h1 therefore has a unique expansion

    w = sum_i  w_i (.) y^{(.) i}        with every w_i in h0,

and ``reg`` projects onto the constant coefficient w_0.

The plain-product decomposition is computed by stripping leading y-runs: if
the largest number of leading y letters over the support of w is L, the terms
with exactly L leading y's equal L! * y^L * w_L, which identifies w_L; then
subtract w_L (.) y^{(.)L} and recurse.  The subtraction only introduces terms
with fewer leading y's, so the loop terminates, and freeness of the polynomial
algebra makes the result unique.  Star-product decompositions are obtained by
conjugating with the map S, which is an algebra isomorphism onto the plain
products fixing y.

The module also hosts the polynomial-in-T values of the regularized maps and
the comparison map ``rho`` linking the two regularizations numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import maps, products
from .words import NotInH1, WordSum

PRODUCT_TAGS = ("shuffle", "stuffle", "star_shuffle", "star_stuffle")

_STAR_OF = {"star_shuffle": "shuffle", "star_stuffle": "stuffle"}


class PrecisionExhausted(RuntimeError):
    """Raised when a computation needs more precomputed values than available."""


@lru_cache(maxsize=4096)
def y_power(tag: str, i: int) -> WordSum:
    """i-fold product power of the single word y under the tagged product."""
    prod = products.PRODUCTS[tag]
    out = WordSum.one()
    y = WordSum.word("y")
    for _ in range(i):
        out = prod(out, y)
    return out


@dataclass(frozen=True)
class RegDecomposition:
    """Coefficients (w_0, w_1, ..., w_d) of w in h0[y] for one product tag."""

    coefficients: tuple[WordSum, ...]
    product: str

    @property
    def reg(self) -> WordSum:
        return self.coefficients[0] if self.coefficients else WordSum.zero()

    def reconstruct(self) -> WordSum:
        prod = products.PRODUCTS[self.product]
        out = WordSum.zero()
        for i, wi in enumerate(self.coefficients):
            if wi:
                out = out + prod(wi, y_power(self.product, i))
        return out

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        sym = {"shuffle": "(sh)", "stuffle": "(st)",
               "star_shuffle": "(ssh)", "star_stuffle": "(sst)"}[self.product]
        parts = []
        for i, wi in enumerate(self.coefficients):
            if wi.is_zero():
                continue
            body = f"[{wi}]"
            parts.append(body if i == 0 else f"{body} {sym} y^{i}")
        return " + ".join(parts) if parts else "0"


def _leading_y_run(w: str) -> int:
    n = 0
    for c in w:
        if c != "y":
            break
        n += 1
    return n


def reg_decompose(w, tag: str) -> RegDecomposition:
    """Unique expansion of an h1 element over h0 in the tagged polynomial algebra."""
    from .words import as_word_sum
    w = as_word_sum(w)
    if tag not in PRODUCT_TAGS:
        raise ValueError(f"unknown product tag {tag!r}")
    if not w.in_h1():
        raise NotInH1("reg_decompose needs support in h1")

    base = _STAR_OF.get(tag)
    if base is not None:
        inner = reg_decompose(maps.s_map(w), base)
        return RegDecomposition(
            tuple(maps.s_inv(wi) for wi in inner.coefficients), tag)

    prod = products.PRODUCTS[tag]
    coeffs: dict[int, WordSum] = {}
    rem = w
    while rem:
        level = max(_leading_y_run(u) for u, _ in rem.items())
        stripped = WordSum({u[level:]: c for u, c in rem.items()
                            if _leading_y_run(u) == level})
        wi = stripped / math.factorial(level)
        coeffs[level] = wi
        if level == 0:
            break
        rem = rem - prod(wi, y_power(tag, level))
    top = max(coeffs, default=-1)
    seq = tuple(coeffs.get(i, WordSum.zero()) for i in range(top + 1))
    return RegDecomposition(seq, tag)


def reg(w, tag: str) -> WordSum:
    """Constant-term projection h1 -> h0; an algebra homomorphism per tag."""
    return reg_decompose(w, tag).reg


# -- polynomial values in T ---------------------------------------------------


class TPolynomial:
    """Polynomial in the regularization symbol T; trailing zeros trimmed."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and _is_exact_zero(coeffs[-1]):
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, i: int):
        return self.coefficients[i] if i < len(self.coefficients) else 0

    def at_zero(self):
        return self.coeff(0)

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return TPolynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return TPolynomial([self.coeff(i) - other.coeff(i) for i in range(n)])

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coefficients), default=0)

    def __eq__(self, other):
        if not isinstance(other, TPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        chunks = []
        for i, c in enumerate(self.coefficients):
            if i == 0:
                chunks.append(str(c))
            elif i == 1:
                chunks.append(f"{c} T")
            else:
                chunks.append(f"{c} T^{i}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"TPolynomial({list(self.coefficients)!r})"


def _is_exact_zero(c) -> bool:
    try:
        return c == 0
    except TypeError:
        return False


def rho_series_coefficients(zeta_source, degree: int):
    """Coefficients a_0..a_degree of exp(sum_{n>=2} (-1)^n/n zeta(n) u^n)."""
    from mpmath import mp
    from .series import TruncatedSeries, mp_ring
    ring = mp_ring(mp)
    arg = TruncatedSeries(ring, 1, degree, {
        (n,): _zeta_of(zeta_source, n) * ((-1) ** n) / n
        for n in range(2, degree + 1)
    })
    e = arg.exp()
    return [e.coeff((m,)) for m in range(degree + 1)]


def _zeta_of(zeta_source, n: int):
    if callable(zeta_source):
        return zeta_source(n)
    try:
        return zeta_source[n]
    except (IndexError, KeyError) as exc:
        raise PrecisionExhausted(f"no zeta value available for n={n}") from exc


def rho_apply(p: TPolynomial, zeta_source, degree_bound: int | None = None) -> TPolynomial:
    """Apply the linear map with rho(e^{Tu}) = A(u) e^{Tu} to a T-polynomial."""
    deg = p.degree()
    if deg < 0:
        return TPolynomial()
    if degree_bound is not None and deg > degree_bound:
        raise PrecisionExhausted(
            f"polynomial degree {deg} exceeds available zeta table ({degree_bound})")
    a = rho_series_coefficients(zeta_source, deg)
    out = [0] * (deg + 1)
    for n_pow, c in enumerate(p.coefficients):
        if _is_exact_zero(c):
            continue
        for m in range(n_pow + 1):
            # rho(T^N) = sum_m N!/(N-m)! a_m T^(N-m)
            factor = Fraction(math.factorial(n_pow), math.factorial(n_pow - m))
            out[n_pow - m] += c * a[m] * factor.numerator / factor.denominator
    return TPolynomial(out)


def z_reg_polynomial(w, tag: str, evaluate) -> TPolynomial:
    """Regularized value of w as a polynomial in T.

    ``evaluate`` maps an h0 :class:`WordSum` to a scalar; for the star tags it
    must be the star value (the composition with S), matching the convention
    that star decompositions carry star coefficients.
    """
    dec = reg_decompose(w, tag)
    return TPolynomial([evaluate(wi) for wi in dec.coefficients])

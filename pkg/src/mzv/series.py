"""Truncated multivariate power series over pluggable coefficient rings.

A :class:`TruncatedSeries` stores coefficients for monomials of total degree
up to a fixed bound; arithmetic (including products, exponentials of series
with zero constant term and inverses of series with constant term one) is
exact through that bound.

The coefficient ring is abstracted by a tiny :class:`Ring` adapter so the same
code runs over exact rationals, mpmath reals/complexes at ambient precision,
and word sums under a chosen commutative product (stuffle and friends).
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Callable

from .words import WordSum


class Ring:
    """Commutative ring operations over a Q-algebra."""

    def __init__(self, zero, one, add, mul, neg, scale, is_zero):
        self.zero = zero
        self.one = one
        self.add = add
        self.mul = mul
        self.neg = neg
        self.scale = scale          # scale(a, q) with q a Fraction/int
        self.is_zero = is_zero


RATIONAL_RING = Ring(
    zero=lambda: Fraction(0),
    one=lambda: Fraction(1),
    add=operator.add,
    mul=operator.mul,
    neg=operator.neg,
    scale=lambda a, q: a * Fraction(q),
    is_zero=lambda a: a == 0,
)


def mp_ring(mp) -> Ring:
    """Ring of mpmath reals/complexes at the caller's working precision."""
    return Ring(
        zero=lambda: mp.mpf(0),
        one=lambda: mp.mpf(1),
        add=operator.add,
        mul=operator.mul,
        neg=operator.neg,
        scale=lambda a, q: a * Fraction(q).numerator / Fraction(q).denominator,
        is_zero=lambda a: a == 0,
    )


def word_ring(product: Callable[[WordSum, WordSum], WordSum]) -> Ring:
    """Word sums under one of the four commutative products."""
    return Ring(
        zero=WordSum.zero,
        one=WordSum.one,
        add=operator.add,
        mul=product,
        neg=operator.neg,
        scale=lambda a, q: a.scale(Fraction(q)),
        is_zero=lambda a: a.is_zero(),
    )


class TruncatedSeries:
    """Power series in ``nvars`` commuting variables, truncated at total degree."""

    __slots__ = ("ring", "nvars", "trunc", "terms")

    def __init__(self, ring: Ring, nvars: int, trunc: int, terms=None):
        self.ring = ring
        self.nvars = nvars
        self.trunc = trunc
        clean = {}
        if terms:
            for e, c in terms.items():
                if sum(e) <= trunc and not ring.is_zero(c):
                    clean[e] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars, trunc):
        return cls(ring, nvars, trunc)

    @classmethod
    def const(cls, ring, nvars, trunc, value):
        return cls(ring, nvars, trunc, {(0,) * nvars: value})

    @classmethod
    def one(cls, ring, nvars, trunc):
        return cls.const(ring, nvars, trunc, ring.one())

    @classmethod
    def variable(cls, ring, nvars, trunc, i):
        e = [0] * nvars
        e[i] = 1
        return cls(ring, nvars, trunc, {tuple(e): ring.one()})

    def _like(self, terms):
        return TruncatedSeries(self.ring, self.nvars, self.trunc, terms)

    # -- ring operations -------------------------------------------------------

    def coeff(self, expts):
        if isinstance(expts, int):
            expts = (expts,)
        return self.terms.get(tuple(expts), self.ring.zero())

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = self.ring.add(out[e], c) if e in out else c
        return self._like(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._like({e: self.ring.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > self.trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                p = ring.mul(c1, c2)
                out[e] = ring.add(out[e], p) if e in out else p
        return self._like(out)

    def scale(self, q):
        return self._like({e: self.ring.scale(c, q) for e, c in self.terms.items()})

    def scale_elem(self, value):
        return self._like({e: self.ring.mul(c, value) for e, c in self.terms.items()})

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def exp(self):
        """exp of a series with zero constant term."""
        if not self.ring.is_zero(self.constant_term()):
            raise ValueError("exp needs zero constant term")
        out = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        power = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        for j in range(1, self.trunc + 1):
            power = power * self
            if not power.terms:
                break
            out = out + power.scale(Fraction(1, math.factorial(j)))
        return out

    def inverse(self):
        """Inverse of a series whose constant term is one."""
        one = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        delta = one - self
        if not self.ring.is_zero(delta.constant_term()):
            raise ValueError("inverse needs constant term one")
        out = one
        power = one
        for _ in range(self.trunc):
            power = power * delta
            if not power.terms:
                break
            out = out + power
        return out

    def derivative(self, var: int = 0):
        out = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            e2 = list(e)
            e2[var] -= 1
            out[tuple(e2)] = self.ring.scale(c, e[var])
        return self._like(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        z = self.ring.zero()
        for e in keys:
            a = self.terms.get(e, z)
            b = other.terms.get(e, z)
            if not self.ring.is_zero(self.ring.add(a, self.ring.neg(b))):
                return False
        return True

    def __repr__(self):
        n = len(self.terms)
        return f"TruncatedSeries(nvars={self.nvars}, trunc={self.trunc}, {n} terms)"


def from_coeff_list(ring: Ring, coeffs, trunc: int | None = None) -> TruncatedSeries:
    """One-variable series from a coefficient list (degree = position)."""
    if trunc is None:
        trunc = len(coeffs) - 1
    return TruncatedSeries(ring, 1, trunc, {(i,): c for i, c in enumerate(coeffs)})


def max_abs_delta(a: TruncatedSeries, b: TruncatedSeries) -> float:
    """Largest coefficientwise |a - b| for numeric rings."""
    keys = set(a.terms) | set(b.terms)
    z = a.ring.zero()
    worst = 0
    for e in keys:
        d = abs(a.terms.get(e, z) - b.terms.get(e, z))
        if d > worst:
            worst = d
    return worst

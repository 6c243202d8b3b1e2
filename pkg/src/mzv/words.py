"""Words over the two-letter alphabet {x, y} and their exact linear combinations.

Words are plain Python strings over the characters ``x`` and ``y``; the empty
string is the empty word.  A word of length k has weight k.  The subspaces are

* ``h``  : all words,
* ``h1`` : the empty word and words ending in ``y``,
* ``h0`` : the empty word and words starting with ``x`` and ending in ``y``.

Compositions of positive integers ("indices") are tuples of ints; the index
(k1, ..., kn) corresponds to the h1 word z_{k1}...z_{kn} with z_k = x^(k-1) y.

:class:`WordSum` is a finitely supported map word -> Fraction, the element type
of every algebraic operation in this package.  Coefficients are exact; zero
coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Mapping

X = "x"
Y = "y"
LETTERS = (X, Y)

SPACES = ("H", "H1", "H0")


class NotInH1(ValueError):
    """Raised when an operation requires support inside ``h1``."""


class NotInH0(ValueError):
    """Raised when an operation requires support inside ``h0``."""


class NotAdmissible(ValueError):
    """Raised when an index must be admissible (first part >= 2) but is not."""


def is_word(w: str) -> bool:
    return isinstance(w, str) and all(c in LETTERS for c in w)


def weight(w: str) -> int:
    """Weight of a word, i.e. its length."""
    return len(w)


def in_h1(w: str) -> bool:
    return w == "" or w[-1] == Y


def in_h0(w: str) -> bool:
    return w == "" or (w[0] == X and w[-1] == Y)


def index_to_word(parts: Iterable[int]) -> str:
    """Concatenate the blocks x^(k-1) y for each part k of the index."""
    out = []
    for k in parts:
        if k < 1:
            raise ValueError(f"index parts must be >= 1, got {k}")
        out.append(X * (k - 1) + Y)
    return "".join(out)


def word_to_index(w: str) -> tuple[int, ...]:
    """Inverse of :func:`index_to_word`; requires a word in ``h1``."""
    if not in_h1(w):
        raise NotInH1(f"word {w!r} does not end in y")
    parts = []
    run = 0
    for c in w:
        if c == X:
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(parts)


def weight_depth_height(parts: Iterable[int]) -> tuple[int, int, int]:
    """(sum of parts, number of parts, number of parts >= 2)."""
    parts = tuple(parts)
    return (sum(parts), len(parts), sum(1 for k in parts if k >= 2))


def is_admissible(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return len(parts) == 0 or parts[0] >= 2


def dual_word(w: str) -> str:
    """Reverse the word and swap x <-> y; an involution on ``h0``."""
    if not in_h0(w):
        raise NotInH0(f"word {w!r} is not in h0")
    swap = {X: Y, Y: X}
    return "".join(swap[c] for c in reversed(w))


def enumerate_words(k: int, space: str = "H") -> list[str]:
    """All words of weight ``k`` in the given subspace, in canonical order.

    Canonical order is lexicographic with x < y.  Counts are 2^k for H,
    2^(k-1) for H1 (k >= 1) and 2^(k-2) for H0 (k >= 2).
    """
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}")
    if k < 0:
        raise ValueError("weight must be >= 0")
    if k == 0:
        return [""]
    if space == "H":
        mids = _all_words(k)
        return list(mids)
    if space == "H1":
        return [w + Y for w in _all_words(k - 1)]
    if k < 2:
        return []
    return [X + w + Y for w in _all_words(k - 2)]


def _all_words(k: int) -> list[str]:
    if k == 0:
        return [""]
    out = [""]
    for _ in range(k):
        out = [w + c for w in out for c in LETTERS]
    # building letter-by-letter on the right is not lex order; sort once
    out.sort()
    return out


def enumerate_indices(k: int, depth: int | None = None,
                      height: int | None = None) -> list[tuple[int, ...]]:
    """Admissible indices of weight ``k``, optionally filtered by depth/height.

    Returned in the canonical order of their words.
    """
    out = []
    for w in enumerate_words(k, "H0"):
        idx = word_to_index(w)
        if depth is not None and len(idx) != depth:
            continue
        if height is not None and sum(1 for p in idx if p >= 2) != height:
            continue
        out.append(idx)
    return out


def zagier_d(k: int) -> int:
    """Dimension bound sequence: d0=1, d1=0, d2=1, d_k = d_{k-2} + d_{k-3}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    d = [1, 0, 1]
    for i in range(3, k + 1):
        d.append(d[i - 2] + d[i - 3])
    return d[k]


def word_sort_key(w: str) -> tuple[int, str]:
    """Canonical order: by weight, then lexicographic with x < y."""
    return (len(w), w)


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class WordSum:
    """A finitely supported Fraction-linear combination of words.

    Immutable by convention: all operators return fresh instances and never
    mutate their arguments, so values can be shared freely (including across
    threads).  ``*`` is the concatenation product of the noncommutative
    polynomial algebra when both operands are word sums, and scalar
    multiplication when one operand is a rational number.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean: dict[str, Fraction] = {}
        if terms:
            for w, c in terms.items():
                if not is_word(w):
                    raise ValueError(f"not a word over {{x,y}}: {w!r}")
                c = _coerce_coeff(c)
                if c:
                    clean[w] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "WordSum":
        return cls()

    @classmethod
    def one(cls) -> "WordSum":
        return cls({"": 1})

    @classmethod
    def word(cls, w: str, coeff=1) -> "WordSum":
        return cls({w: coeff})

    @classmethod
    def from_index(cls, parts: Iterable[int], coeff=1) -> "WordSum":
        return cls({index_to_word(parts): coeff})

    @classmethod
    def _raw(cls, terms: dict[str, Fraction]) -> "WordSum":
        # internal fast path: caller guarantees normalized Fraction terms
        self = object.__new__(cls)
        self._terms = terms
        return self

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[str, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: word_sort_key(kv[0]))

    def coeff(self, w: str) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def support(self) -> list[str]:
        return sorted(self._terms, key=word_sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def in_h1(self) -> bool:
        return all(in_h1(w) for w in self._terms)

    def in_h0(self) -> bool:
        return all(in_h0(w) for w in self._terms)

    def homogeneous_weight(self) -> int:
        """The common weight of all supported words; raises on mixed weights.

        The zero sum is homogeneous of every weight; we return -1 for it.
        """
        weights = {len(w) for w in self._terms}
        if not weights:
            return -1
        if len(weights) > 1:
            raise ValueError(f"not homogeneous: weights {sorted(weights)}")
        return weights.pop()

    def max_weight(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, WordSum):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "WordSum") -> "WordSum":
        if not isinstance(other, WordSum):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return WordSum._raw(out)

    def __sub__(self, other: "WordSum") -> "WordSum":
        if not isinstance(other, WordSum):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) - c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return WordSum._raw(out)

    def __neg__(self) -> "WordSum":
        return WordSum._raw({w: -c for w, c in self._terms.items()})

    def scale(self, c) -> "WordSum":
        c = _coerce_coeff(c)
        if not c:
            return WordSum.zero()
        return WordSum._raw({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WordSum):
            return self.concat(other)
        if isinstance(other, (int, _RationalABC)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self.scale(Fraction(1, 1) / Fraction(other))
        return NotImplemented

    def concat(self, other: "WordSum") -> "WordSum":
        """Concatenation (noncommutative polynomial) product."""
        out: dict[str, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                s = out.get(w, 0) + a * b
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return WordSum._raw(out)

    def map_words(self, f) -> "WordSum":
        """Linear extension of a map word -> WordSum."""
        out = WordSum.zero()
        for w, c in self._terms.items():
            out = out + f(w).scale(c)
        return out

    # -- serialization -----------------------------------------------------

    def __str__(self) -> str:
        return format_word_sum(self)

    def __repr__(self) -> str:
        return f"WordSum({str(self)!r})"


def as_word_sum(value) -> WordSum:
    """Coerce a word string, an index tuple/list, or a WordSum."""
    if isinstance(value, WordSum):
        return value
    if isinstance(value, str):
        return WordSum.word(value)
    if isinstance(value, (tuple, list)):
        return WordSum.from_index(value)
    raise TypeError(f"cannot interpret {value!r} as a word sum")


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_word_sum(ws: WordSum, indices: bool = False) -> str:
    """Canonical text form: terms in canonical order, e.g. ``2*xyxy - xxy``.

    The empty word renders as ``()`` so that output stays parseable.  With
    ``indices=True`` every h1 word renders in index notation instead.
    """
    items = ws.sorted_items()
    if not items:
        return "0"
    chunks: list[str] = []
    for w, c in items:
        if indices and in_h1(w):
            atom = format_index(word_to_index(w))
        else:
            atom = w if w else "()"
        mag = abs(c)
        body = atom if mag == 1 else f"{format_rational(mag)}*{atom}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def format_index(parts: Iterable[int]) -> str:
    parts = tuple(parts)
    return "(" + ",".join(str(p) for p in parts) + ")"

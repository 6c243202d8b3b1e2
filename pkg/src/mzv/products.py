"""The four bilinear products on word sums.

``shuffle`` and ``star_shuffle`` are defined on all of h; ``stuffle`` and
``star_stuffle`` require both arguments inside h1.  All four are commutative
and associative, close on h1 and h0 and add weights of homogeneous inputs.

Word-level expansions are memoized on canonical (sorted) word pairs; cached
values are immutable tuples, so the caches behave as idempotent insert-only
maps and results do not depend on whether a cache entry was present.
"""

from __future__ import annotations

from functools import lru_cache

from .words import NotInH1, WordSum, index_to_word, word_to_index

# Bound on the word-pair memo tables.  Each entry is small (a tuple of
# (word, int) pairs); 1 << 18 entries comfortably covers weight-12 work.
CACHE_SIZE = 1 << 18


def _bilinear(word_product, u: WordSum, v: WordSum) -> WordSum:
    out: dict = {}
    for wu, cu in u.items():
        for wv, cv in v.items():
            c = cu * cv
            for w, m in word_product(wu, wv):
                s = out.get(w, 0) + c * m
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return WordSum._raw(out)


def _merge(parts) -> dict:
    out: dict = {}
    for w, c in parts:
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def _freeze(d: dict) -> tuple:
    return tuple(sorted(d.items()))


# -- shuffle ----------------------------------------------------------------

@lru_cache(maxsize=CACHE_SIZE)
def _shuffle_words(u: str, v: str) -> tuple:
    if u > v:
        u, v = v, u
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict = {}
    for w, c in _shuffle_words(u[1:], v):
        w = u[0] + w
        out[w] = out.get(w, 0) + c
    for w, c in _shuffle_words(u, v[1:]):
        w = v[0] + w
        out[w] = out.get(w, 0) + c
    return _freeze(out)


def shuffle(u, v) -> WordSum:
    """Shuffle product: interleaves letters in all order-preserving ways."""
    from .words import as_word_sum
    return _bilinear(_shuffle_words, as_word_sum(u), as_word_sum(v))


# -- stuffle ----------------------------------------------------------------

@lru_cache(maxsize=CACHE_SIZE)
def _stuffle_indices(p: tuple, q: tuple) -> tuple:
    if p > q:
        p, q = q, p
    if not p:
        return ((q, 1),)
    if not q:
        return ((p, 1),)
    out: dict = {}
    for r, c in _stuffle_indices(p[1:], q):
        r = (p[0],) + r
        out[r] = out.get(r, 0) + c
    for r, c in _stuffle_indices(p, q[1:]):
        r = (q[0],) + r
        out[r] = out.get(r, 0) + c
    for r, c in _stuffle_indices(p[1:], q[1:]):
        r = (p[0] + q[0],) + r
        out[r] = out.get(r, 0) + c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=CACHE_SIZE)
def _star_stuffle_indices(p: tuple, q: tuple) -> tuple:
    if p > q:
        p, q = q, p
    if not p:
        return ((q, 1),)
    if not q:
        return ((p, 1),)
    out: dict = {}
    for r, c in _star_stuffle_indices(p[1:], q):
        r = (p[0],) + r
        out[r] = out.get(r, 0) + c
    for r, c in _star_stuffle_indices(p, q[1:]):
        r = (q[0],) + r
        out[r] = out.get(r, 0) + c
    for r, c in _star_stuffle_indices(p[1:], q[1:]):
        r = (p[0] + q[0],) + r
        out[r] = out.get(r, 0) - c
    return tuple(sorted(out.items()))


def _index_product(index_table, u: str, v: str) -> tuple:
    if not (u == "" or u[-1] == "y") or not (v == "" or v[-1] == "y"):
        raise NotInH1(f"stuffle products need h1 words, got {u!r}, {v!r}")
    pairs = index_table(word_to_index(u), word_to_index(v))
    return tuple((index_to_word(r), c) for r, c in pairs)


def stuffle(u, v) -> WordSum:
    """Quasi-shuffle (harmonic) product: interleave index parts or merge them."""
    from .words import as_word_sum
    return _bilinear(lambda a, b: _index_product(_stuffle_indices, a, b),
                     as_word_sum(u), as_word_sum(v))


def star_stuffle(u, v) -> WordSum:
    """Stuffle variant with a minus sign on every merged part."""
    from .words import as_word_sum
    return _bilinear(lambda a, b: _index_product(_star_stuffle_indices, a, b),
                     as_word_sum(u), as_word_sum(v))


# -- star shuffle ------------------------------------------------------------

@lru_cache(maxsize=CACHE_SIZE)
def _star_shuffle_words(u: str, v: str) -> tuple:
    if u > v:
        u, v = v, u
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict = {}
    for w, c in _star_shuffle_words(u[1:], v):
        w = u[0] + w
        out[w] = out.get(w, 0) + c
    for w, c in _star_shuffle_words(u, v[1:]):
        w = v[0] + w
        out[w] = out.get(w, 0) + c
    # correction terms: when one factor is a single letter y, an extra x
    # replaces it in front of the other factor, with a minus sign
    if len(u) == 1 and u == "y":
        out["x" + v] = out.get("x" + v, 0) - 1
    if len(v) == 1 and v == "y":
        out["x" + u] = out.get("x" + u, 0) - 1
    return _freeze(out)


def star_shuffle(u, v) -> WordSum:
    """Shuffle variant adapted to star values; conjugate to shuffle by S."""
    from .words import as_word_sum
    return _bilinear(_star_shuffle_words, as_word_sum(u), as_word_sum(v))


PRODUCTS = {
    "shuffle": shuffle,
    "stuffle": stuffle,
    "star_shuffle": star_shuffle,
    "star_stuffle": star_stuffle,
}


def product_power(product, base: WordSum, n: int) -> WordSum:
    """n-fold product power of ``base`` under the given product (n >= 0)."""
    out = WordSum.one()
    for _ in range(n):
        out = product(out, base)
    return out


def clear_caches() -> None:
    _shuffle_words.cache_clear()
    _stuffle_indices.cache_clear()
    _star_stuffle_indices.cache_clear()
    _star_shuffle_words.cache_clear()

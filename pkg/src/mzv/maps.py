"""Structural linear maps on word sums.

* ``sigma`` / ``sigma_inv`` : the algebra automorphism x -> x, y -> x + y and
  its inverse (y -> -x + y).
* ``s_map`` / ``s_inv``     : S(wa) = sigma(w) a; realizes star values as
  Z* = Z o S.  Preserves h1 and h0.
* ``s_tilde`` / ``s_tilde_inv`` : twists the last letter instead of the prefix,
  S~(wa) = w sigma(a); satisfies S~ = S^{-1} o sigma.
* ``tau``                   : the antiautomorphism reversing words and swapping
  x <-> y; duality on h0.
* ``partial_n`` / ``partial_n_star`` : the weight-raising derivations and their
  S-conjugates.
* ``ohno_sigma`` and barred/starred variants: the weight-raising composition
  sum operators behind Ohno-type relations.

All maps are pure and operate linearly on :class:`~mzv.words.WordSum`.
"""

from __future__ import annotations

from functools import lru_cache

from .words import (
    NotInH0,
    NotInH1,
    WordSum,
    as_word_sum,
    in_h0,
    in_h1,
    index_to_word,
    word_to_index,
)

_CACHE = 1 << 16


def _letter_sub(w: str, y_image: tuple[tuple[str, int], ...]) -> dict[str, int]:
    """Multiplicative substitution fixing x and sending y to ``y_image``."""
    terms: dict[str, int] = {"": 1}
    for ch in w:
        if ch == "x":
            terms = {p + "x": c for p, c in terms.items()}
        else:
            nxt: dict[str, int] = {}
            for p, c in terms.items():
                for img, m in y_image:
                    k = p + img
                    nxt[k] = nxt.get(k, 0) + c * m
            terms = nxt
    return terms


@lru_cache(maxsize=_CACHE)
def _sigma_word(w: str) -> tuple:
    return tuple(_letter_sub(w, (("x", 1), ("y", 1))).items())


@lru_cache(maxsize=_CACHE)
def _sigma_inv_word(w: str) -> tuple:
    return tuple(_letter_sub(w, (("x", -1), ("y", 1))).items())


def _linear(word_map, u) -> WordSum:
    u = as_word_sum(u)
    out: dict = {}
    for w, c in u.items():
        for r, m in word_map(w):
            s = out.get(r, 0) + c * m
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return WordSum._raw(out)


def sigma(u) -> WordSum:
    return _linear(_sigma_word, u)


def sigma_inv(u) -> WordSum:
    return _linear(_sigma_inv_word, u)


@lru_cache(maxsize=_CACHE)
def _s_word(w: str) -> tuple:
    if not w:
        return (("", 1),)
    return tuple((p + w[-1], c) for p, c in _sigma_word(w[:-1]))


@lru_cache(maxsize=_CACHE)
def _s_inv_word(w: str) -> tuple:
    if not w:
        return (("", 1),)
    return tuple((p + w[-1], c) for p, c in _sigma_inv_word(w[:-1]))


def s_map(u) -> WordSum:
    return _linear(_s_word, u)


def s_inv(u) -> WordSum:
    return _linear(_s_inv_word, u)


def _last_letter_sub(w: str, y_image: tuple[tuple[str, int], ...]) -> tuple:
    if not w:
        return (("", 1),)
    if w[-1] == "x":
        return ((w, 1),)
    return tuple((w[:-1] + img, m) for img, m in y_image)


def s_tilde(u) -> WordSum:
    return _linear(lambda w: _last_letter_sub(w, (("x", 1), ("y", 1))), u)


def s_tilde_inv(u) -> WordSum:
    return _linear(lambda w: _last_letter_sub(w, (("x", -1), ("y", 1))), u)


_SWAP = str.maketrans("xy", "yx")


def tau_word(w: str) -> str:
    return w[::-1].translate(_SWAP)


def tau(u) -> WordSum:
    """Antiautomorphism: reverse every word and swap letters; an involution."""
    u = as_word_sum(u)
    return WordSum._raw({tau_word(w): c for w, c in u.items()})


# -- derivations -------------------------------------------------------------

@lru_cache(maxsize=_CACHE)
def _middle_words(n: int) -> tuple[str, ...]:
    # all words of length n - 1 (the expansion of (x + y)^(n-1))
    out = [""]
    for _ in range(n - 1):
        out = [w + c for w in out for c in "xy"]
    return tuple(out)


def partial_n(n: int, u) -> WordSum:
    """Derivation sending x to x(x+y)^(n-1)y and y to minus that; raises weight by n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    u = as_word_sum(u)
    mids = _middle_words(n)
    out: dict = {}
    for w, c in u.items():
        for i, ch in enumerate(w):
            sign = c if ch == "x" else -c
            pre, post = w[:i], w[i + 1:]
            for m in mids:
                r = pre + "x" + m + "y" + post
                s = out.get(r, 0) + sign
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
    return WordSum._raw(out)


def partial_n_star(n: int, u) -> WordSum:
    """S-conjugate of :func:`partial_n`; a left S~-derivation."""
    return s_inv(partial_n(n, s_map(u)))


# -- Ohno operators ----------------------------------------------------------

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


def ohno_sigma(m: int, u) -> WordSum:
    """Distribute m extra weight over the parts of each index in all ways."""
    if m < 0:
        raise ValueError("m must be >= 0")
    u = as_word_sum(u)
    if not u.in_h1():
        raise NotInH1("ohno_sigma needs support in h1")
    out: dict = {}
    for w, c in u.items():
        idx = word_to_index(w)
        d = len(idx)
        if d == 0:
            if m == 0:
                out[""] = out.get("", 0) + c
            continue
        for eps in _weak_compositions(m, d):
            r = index_to_word(k + e for k, e in zip(idx, eps))
            s = out.get(r, 0) + c
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return WordSum._raw(out)


def _require_h0(u: WordSum, who: str) -> None:
    if not u.in_h0():
        raise NotInH0(f"{who} needs support in h0")


def ohno_sigma_bar(m: int, u) -> WordSum:
    """tau-conjugate of :func:`ohno_sigma`; defined on h0."""
    u = as_word_sum(u)
    _require_h0(u, "ohno_sigma_bar")
    return tau(ohno_sigma(m, tau(u)))


def ohno_sigma_star(m: int, u) -> WordSum:
    """S-conjugate of :func:`ohno_sigma`; defined on h1."""
    return s_inv(ohno_sigma(m, s_map(as_word_sum(u))))


def ohno_sigma_bar_star(m: int, u) -> WordSum:
    """S-conjugate of :func:`ohno_sigma_bar`; defined on h0."""
    u = as_word_sum(u)
    _require_h0(u, "ohno_sigma_bar_star")
    return s_inv(ohno_sigma_bar(m, s_map(u)))


MAP_NAMES = {
    "S": s_map,
    "Sinv": s_inv,
    "stilde": s_tilde,
    "stildeinv": s_tilde_inv,
    "tau": tau,
    "sigma": sigma,
    "sigmainv": sigma_inv,
}

PARAMETRIC_MAP_NAMES = {
    "dn": partial_n,
    "dnstar": partial_n_star,
    "ohno": ohno_sigma,
    "ohnobar": ohno_sigma_bar,
    "ohnostar": ohno_sigma_star,
    "ohnobarstar": ohno_sigma_bar_star,
}

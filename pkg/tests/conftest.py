"""Shared test helpers: brute-force product oracles and random samplers.

The oracles expand products from their combinatorial descriptions (choices of
interleaving positions), independently of the recursive definitions used by
the package, so the two routes cross-check each other.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from mzv.words import WordSum, enumerate_words, index_to_word, word_to_index


def brute_shuffle(u: str, v: str) -> WordSum:
    """Shuffle by enumerating position subsets for the first word."""
    n, m = len(u), len(v)
    out: dict[str, Fraction] = {}
    for spots in combinations(range(n + m), n):
        word = [""] * (n + m)
        ui = vi = 0
        spots_set = set(spots)
        for i in range(n + m):
            if i in spots_set:
                word[i] = u[ui]
                ui += 1
            else:
                word[i] = v[vi]
                vi += 1
        w = "".join(word)
        out[w] = out.get(w, Fraction(0)) + 1
    return WordSum(out)


def brute_stuffle(p: tuple[int, ...], q: tuple[int, ...]) -> WordSum:
    """Quasi-shuffle by enumerating pairs of surjective position choices."""
    out: dict[str, Fraction] = {}
    for r in range(max(len(p), len(q)), len(p) + len(q) + 1):
        for ppos in combinations(range(r), len(p)):
            for qpos in combinations(range(r), len(q)):
                if set(ppos) | set(qpos) != set(range(r)):
                    continue
                parts = [0] * r
                for i, pos in enumerate(ppos):
                    parts[pos] += p[i]
                for i, pos in enumerate(qpos):
                    parts[pos] += q[i]
                w = index_to_word(parts)
                out[w] = out.get(w, Fraction(0)) + 1
    return WordSum(out)


class Sampler:
    """Deterministic random words and word sums for the property suite."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def word(self, max_weight: int, space: str = "H", min_weight: int = 0) -> str:
        k = self.rng.randint(min_weight, max_weight)
        words = enumerate_words(k, space)
        while not words:
            k = self.rng.randint(min_weight, max_weight)
            words = enumerate_words(k, space)
        return self.rng.choice(words)

    def index(self, max_weight: int, min_weight: int = 2) -> tuple[int, ...]:
        return word_to_index(self.word(max_weight, "H0", min_weight))

    def word_sum(self, max_weight: int, space: str = "H", terms: int = 3) -> WordSum:
        out = WordSum.zero()
        for _ in range(self.rng.randint(1, terms)):
            coeff = Fraction(self.rng.randint(-6, 6), self.rng.randint(1, 4))
            out = out + WordSum.word(self.word(max_weight, space), coeff)
        return out


@pytest.fixture
def sampler() -> Sampler:
    return Sampler(20260811)

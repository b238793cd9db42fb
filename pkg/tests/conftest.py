"""Shared fixtures and random-instance generators.

Random triples are built from a random hierarchy: recursively partition the
points, give every cross-block pair the node's value, and recurse with the
value as a ceiling.  That yields the two-largest-sides-equal property by
construction, and drawing values from small pools produces the duplicated
distances (hence greedy ties) the invariance tests need.  Generated triples
still go through full validation.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ultragreedy import MonotoneFamily, PadicSpec, UltraTriple, build_triple, padic_triple

DEFAULT_POOL = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))
TIE_POOL = (Fraction(-1), Fraction(0), Fraction(1))
WEIGHT_POOL = (Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2), Fraction(3, 2))


def random_ultra_triple(rng: random.Random, n: int, *,
                        value_pool=DEFAULT_POOL, zero_weights=False) -> UltraTriple:
    labels = [str(i) for i in range(n)]
    entries = {}

    def assign(idxs: list[int], ceiling) -> None:
        if len(idxs) <= 1:
            return
        candidates = [v for v in value_pool if ceiling is None or v <= ceiling]
        value = rng.choice(candidates)
        k = rng.randint(2, len(idxs))
        shuffled = idxs[:]
        rng.shuffle(shuffled)
        blocks = [[i] for i in shuffled[:k]]
        for i in shuffled[k:]:
            blocks[rng.randrange(k)].append(i)
        for bi in range(k):
            for bj in range(bi + 1, k):
                for a in blocks[bi]:
                    for b in blocks[bj]:
                        entries[(labels[min(a, b)], labels[max(a, b)])] = value
        for block in blocks:
            assign(block, value)

    assign(list(range(n)), None)
    if zero_weights:
        weights = {p: Fraction(0) for p in labels}
    else:
        weights = {p: rng.choice(WEIGHT_POOL) for p in labels}
    return build_triple(labels, weights, [(a, b, v) for (a, b), v in entries.items()])


def random_monotone_family(rng: random.Random, values, depth: int) -> MonotoneFamily:
    values = sorted(Fraction(v) for v in values)
    tables = []
    for _ in range(depth):
        level = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        table = {}
        for v in values:
            table[v] = level
            level += Fraction(rng.randint(0, 2), rng.choice((1, 2)))
        tables.append(table)
    return MonotoneFamily(tables)


def random_monotone_map(rng: random.Random, values) -> dict[Fraction, Fraction]:
    values = sorted(Fraction(v) for v in values)
    level = Fraction(rng.randint(-2, 2), rng.choice((1, 2)))
    out = {}
    for v in values:
        out[v] = level
        level += Fraction(rng.randint(0, 2), rng.choice((1, 2)))
    return out


@pytest.fixture(scope="session")
def nu2_triple() -> UltraTriple:
    """The 2-adic triple on {0, ..., 4} with zero weights, used as a golden."""
    return padic_triple(PadicSpec(p=2, h=0, elements=(0, 1, 2, 3, 4)))

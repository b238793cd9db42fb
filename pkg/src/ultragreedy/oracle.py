"""Brute-force reference implementations.

Everything in this module is deliberately naive: removed distances are
maximized by enumerating subsets, perimeters are recomputed over every
ordering, and maximum-perimeter values come from scanning all subsets.
None of it shares code with the optimized paths (beyond the triple's
distance accessor), so agreement between the two is evidence rather than
tautology.  Size caps are hard errors, never silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable

from .errors import InputError, SizeCapError
from .perimeter import check_r
from .triple import PointId, UltraTriple

DIST_CAP = 20        # binomial enumeration
SET_SCAN_CAP = 16    # 2^n subset scans
PERM_CAP = 8         # n! ordering scans
SWEEP_CAP = 22       # depth-first 2^n sweep


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive-scan maximum together with every witness attaining it."""

    value: Fraction
    witnesses: frozenset[frozenset[PointId]]


def brute_dist_r(t: UltraTriple, C: Iterable[PointId], v: PointId, r: int) -> OracleResult:
    """Removed distance by enumerating every (|C|-r)-subset of C."""
    check_r(r)
    group = sorted(set(C), key=t.index)
    if t.index(v) in {t.index(c) for c in group}:
        raise InputError(f"point {v!r} must not belong to C")
    if len(group) > DIST_CAP:
        raise SizeCapError(f"|C| = {len(group)} exceeds brute_dist_r cap {DIST_CAP}")
    if len(group) <= r:
        return OracleResult(Fraction(0), frozenset({frozenset()}))

    best = None
    argmax: list[tuple[PointId, ...]] = []
    for kept in combinations(group, len(group) - r):
        total = Fraction(0)
        for x in kept:
            total += t.distance(v, x)
        if best is None or total > best:
            best, argmax = total, [kept]
        elif total == best:
            argmax.append(kept)
    return OracleResult(best, frozenset(frozenset(s) for s in argmax))


def _perimeter_along(t: UltraTriple, order: tuple[int, ...], r: int) -> Fraction:
    # Own accumulation loop; deliberately not perimeter.per_r_ordered.
    d = t.dist_matrix
    total = Fraction(0)
    for i in order:
        total += t.weight_vector[i]
    for pos, i in enumerate(order):
        if pos > r:
            row = d[i]
            prefix = sorted(row[j] for j in order[:pos])
            for value in prefix[r:]:
                total += value
    return total


def brute_max_perimeter(t: UltraTriple, k: int, r: int) -> OracleResult:
    """Maximum perimeter among all k-subsets, by scanning every one of them."""
    check_r(r)
    n = len(t.points)
    if n > SET_SCAN_CAP:
        raise SizeCapError(f"{n} points exceeds brute_max_perimeter cap {SET_SCAN_CAP}")
    if not 0 <= k <= n:
        raise InputError(f"k = {k} out of range for {n} points")

    best = None
    argmax: list[tuple[int, ...]] = []
    for subset in combinations(range(n), k):
        total = _perimeter_along(t, subset, r)
        if best is None or total > best:
            best, argmax = total, [subset]
        elif total == best:
            argmax.append(subset)
    witnesses = frozenset(frozenset(t.points[i] for i in s) for s in argmax)
    return OracleResult(best, witnesses)


def brute_all_permutation_perimeters(t: UltraTriple, A: Iterable[PointId], r: int) -> set[Fraction]:
    """Perimeter values over all |A|! orderings of A (a singleton, if the math holds)."""
    check_r(r)
    idxs = sorted({t.index(a) for a in A})
    if len(idxs) > PERM_CAP:
        raise SizeCapError(f"|A| = {len(idxs)} exceeds permutation scan cap {PERM_CAP}")
    return {_perimeter_along(t, order, r) for order in permutations(idxs)}


def brute_max_perimeter_sweep(t: UltraTriple, r: int, k_max: int) -> list[Fraction]:
    """Maximum perimeter per size 0..k_max in one exhaustive depth-first pass.

    Visits every subset once, extending along the canonical point order and
    paying one weight-plus-removed-distance increment per extension (the
    defining sum of the perimeter).  No witnesses are collected, which is
    what lets this reach ground sets around twenty points; use
    :func:`brute_max_perimeter` when the argmax sets matter.  Runs on plain
    integers when every weight and distance is integral.
    """
    check_r(r)
    n = len(t.points)
    if n > SWEEP_CAP:
        raise SizeCapError(f"{n} points exceeds sweep cap {SWEEP_CAP}")
    if not 0 <= k_max <= n:
        raise InputError(f"k_max = {k_max} out of range for {n} points")

    d = t.dist_matrix
    w = t.weight_vector
    integral = all(x.denominator == 1 for x in w) and \
        all(d[i][j].denominator == 1 for i in range(n) for j in range(i + 1, n))
    if integral:
        rows = [[0 if v is None else int(v) for v in row] for row in d]
        weights = [int(x) for x in w]
        zero = 0
    else:
        rows = [[Fraction(0) if v is None else v for v in row] for row in d]
        weights = list(w)
        zero = Fraction(0)

    best: list = [None] * (k_max + 1)
    best[0] = zero
    chosen: list[int] = []

    def extend(start: int, per) -> None:
        depth = len(chosen) + 1
        for x in range(start, n):
            row = rows[x]
            if depth - 1 > r:
                prof = sorted(row[i] for i in chosen)
                inc = weights[x] + sum(prof[r:])
            else:
                inc = weights[x]
            total = per + inc
            if best[depth] is None or total > best[depth]:
                best[depth] = total
            if depth < k_max:
                chosen.append(x)
                extend(x + 1, total)
                chosen.pop()

    if k_max > 0:
        extend(0, zero)
    return [Fraction(v) for v in best]

"""Greedy maximum-perimeter orderings, projections, and the exchange step.

A greedy ordering repeatedly appends a point maximizing weight plus removed
distance to the chosen prefix.  Maximizers are frequently non-unique; the
deterministic functions resolve ties toward the lowest canonical point index,
while the ``all_*`` variants enumerate the complete tie tree so that
choice-independence claims can be tested rather than assumed.

Projection sends a point to its nearest points inside a target set (fixing
points already there); applied sequentially without replacement it maps an
ordered set into a same-size subset of the target.  It is the device behind
:func:`exchange_element`, which produces the element ``u`` making the swap
inequality  per(A \\ u) + per(B + u) >= per(A) + per(B)  hold.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, SizeCapError
from .perimeter import check_r
from .triple import PointId, UltraTriple

ENUMERATION_CAP = 10


@dataclass(frozen=True)
class GreedyTrace:
    """A greedy ordering and its per-step increments (weight + removed distance)."""

    perm: tuple[PointId, ...]
    increments: tuple[Fraction, ...]

    def total(self) -> Fraction:
        """Perimeter of the full ordering; equals the sum of the increments."""
        return sum(self.increments, Fraction(0))


def proj_point(t: UltraTriple, A: Iterable[PointId], c: PointId) -> frozenset[PointId]:
    """Points of ``A`` nearest to ``c``; just ``{c}`` when ``c`` is in ``A``."""
    members = set(A)
    if not members:
        raise InputError("cannot project onto an empty set")
    if c in members:
        return frozenset({c})
    ci = t.index(c)
    row = t.dist_matrix[ci]
    best = min(row[t.index(a)] for a in members)
    return frozenset(a for a in members if row[t.index(a)] == best)


def proj_seq(t: UltraTriple, C: Sequence[PointId], A: Iterable[PointId]) -> tuple[PointId, ...]:
    """Project the ordered points of ``C`` into ``A`` sequentially without replacement.

    Each point goes to its nearest remaining element of ``A`` (itself, if
    still available); ties break toward the lowest canonical index.
    """
    C = list(C)
    if len(set(C)) != len(C):
        raise InputError("duplicate point in C")
    pool = set(A)
    if len(pool) < len(C):
        raise InputError(f"target set too small: |A| = {len(pool)} < |C| = {len(C)}")
    out: list[PointId] = []
    for c in C:
        choice = min(proj_point(t, pool, c), key=t.index)
        out.append(choice)
        pool.remove(choice)
    return tuple(out)


def all_proj_seqs(t: UltraTriple, C: Sequence[PointId], A: Iterable[PointId]) -> tuple[tuple[PointId, ...], ...]:
    """Every sequential projection of ``C`` into ``A`` reachable by some tie choice."""
    C = list(C)
    if len(set(C)) != len(C):
        raise InputError("duplicate point in C")
    pool = set(A)
    if len(pool) < len(C):
        raise InputError(f"target set too small: |A| = {len(pool)} < |C| = {len(C)}")

    results: list[tuple[PointId, ...]] = []

    def branch(step: int, remaining: set[PointId], chosen: list[PointId]) -> None:
        if step == len(C):
            results.append(tuple(chosen))
            return
        for v in sorted(proj_point(t, remaining, C[step]), key=t.index):
            chosen.append(v)
            remaining.remove(v)
            branch(step + 1, remaining, chosen)
            remaining.add(v)
            chosen.pop()

    branch(0, pool, [])
    return tuple(results)


def _resolve_pool(t: UltraTriple, C: Iterable[PointId], m: int) -> list[int]:
    pool = sorted({t.index(c) for c in C})
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise InputError(f"m must be a non-negative integer, got {m!r}")
    if m > len(pool):
        raise InputError(f"m = {m} exceeds pool size {len(pool)}")
    return pool


def greedy_order(t: UltraTriple, C: Iterable[PointId], m: int, r: int) -> GreedyTrace:
    """Deterministic greedy ordering of ``m`` points from ``C`` (lowest index on ties).

    Candidate scores are maintained incrementally: each candidate keeps its
    sorted profile of distances to the prefix, so one step costs one ordered
    insert per candidate instead of a perimeter recomputation.
    """
    check_r(r)
    pool = _resolve_pool(t, C, m)
    d = t.dist_matrix
    w = t.weight_vector

    profiles: dict[int, list[Fraction]] = {x: [] for x in pool}
    remaining = list(pool)
    perm: list[PointId] = []
    incs: list[Fraction] = []
    for _ in range(m):
        best_x = None
        best_val = None
        for x in remaining:
            prof = profiles[x]
            val = w[x] + sum(prof[r:], Fraction(0)) if len(prof) > r else w[x]
            if best_val is None or val > best_val:  # ties keep the earlier (lower-index) x

                best_x, best_val = x, val
        remaining.remove(best_x)
        row = d[best_x]
        for x in remaining:
            insort(profiles[x], row[x])
        perm.append(t.points[best_x])
        incs.append(best_val)
    return GreedyTrace(tuple(perm), tuple(incs))


def all_greedy_orders(t: UltraTriple, C: Iterable[PointId], m: int, r: int) -> tuple[GreedyTrace, ...]:
    """Every greedy ordering reachable by some resolution of the ties.

    Backtracks over each step's full maximizer set; exponential in the worst
    case, hence the hard cap on ``|C|``.
    """
    check_r(r)
    pool = _resolve_pool(t, C, m)
    if len(pool) > ENUMERATION_CAP:
        raise SizeCapError(f"|C| = {len(pool)} exceeds enumeration cap {ENUMERATION_CAP}")
    d = t.dist_matrix
    w = t.weight_vector

    traces: list[GreedyTrace] = []

    def branch(prefix: list[int], remaining: list[int], incs: list[Fraction]) -> None:
        if len(prefix) == m:
            traces.append(GreedyTrace(tuple(t.points[i] for i in prefix), tuple(incs)))
            return
        scored = []
        for x in remaining:
            prof = sorted(d[x][i] for i in prefix)
            val = w[x] + sum(prof[r:], Fraction(0)) if len(prof) > r else w[x]
            scored.append((x, val))
        best = max(val for _, val in scored)
        for x, val in scored:
            if val == best:
                branch(prefix + [x], [y for y in remaining if y != x], incs + [val])

    branch([], pool, [])
    return tuple(traces)


def increment_signature(t: UltraTriple, C: Iterable[PointId], m: int, r: int) -> tuple[Fraction, ...]:
    """The per-step increment sequence shared by every greedy ordering of ``C``.

    Computed from the deterministic ordering; that all tie resolutions agree
    on it is one of the verified invariants of the test suite.
    """
    return greedy_order(t, C, m, r).increments


def exchange_element(t: UltraTriple, A: Iterable[PointId], B: Iterable[PointId], r: int,
                     order: Sequence[PointId] | None = None) -> PointId:
    """Element ``u`` of ``A \\ B`` satisfying the perimeter swap inequality.

    Constructed by projecting ``B`` (canonically ordered, or as ``order``
    prescribes) into ``A`` and returning the unique point of ``A`` the
    projection misses.  Any ordering of ``B`` yields a valid ``u``.
    """
    check_r(r)
    a_set = set(A)
    b_set = set(B)
    for p in a_set | b_set:
        t.index(p)
    if len(a_set) != len(b_set) + 1:
        raise InputError(f"need |A| = |B| + 1, got |A| = {len(a_set)}, |B| = {len(b_set)}")
    if order is None:
        b_ordered: Sequence[PointId] = t.sorted_points(b_set)
    else:
        if set(order) != b_set or len(order) != len(b_set):
            raise InputError("order must be a permutation of B")
        b_ordered = list(order)
    image = proj_seq(t, b_ordered, a_set)
    leftover = a_set.difference(image)
    (u,) = leftover
    return u

"""Removed distances and perimeters.

``dist_r(C, v)`` is the largest possible sum of distances from ``v`` to all
but ``r`` points of ``C`` (zero when ``|C| <= r``); it is computed here by
sorting the distance profile and summing the top ``|C| - r`` entries.  The
equivalence with the subset-maximum definition is not assumed: the oracle
module re-derives it by enumeration and the tests compare the two.

``per_r`` accumulates weight plus removed distance along an ordering.  Its
independence from the ordering is likewise a tested fact, not an assumption;
:func:`per_r_set` just picks the canonical order.

The ``dist_f`` generalization replaces "drop the r smallest" with an
arbitrary family of non-decreasing per-rank value maps applied to the sorted
profile.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .triple import PointId, UltraTriple


def _resolve_group(t: UltraTriple, C: Iterable[PointId], v: PointId) -> tuple[list[int], int]:
    vi = t.index(v)
    ci = [t.index(c) for c in C]
    if len(set(ci)) != len(ci):
        raise InputError("duplicate point in C")
    if vi in ci:
        raise InputError(f"point {v!r} must not belong to C")
    return ci, vi


def check_r(r: int) -> int:
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise InputError(f"removal parameter must be a non-negative integer, got {r!r}")
    return r


def profile(t: UltraTriple, C: Iterable[PointId], v: PointId) -> tuple[Fraction, ...]:
    """Distances from ``v`` to the points of ``C``, sorted non-decreasing."""
    ci, vi = _resolve_group(t, C, v)
    row = t.dist_matrix[vi]
    return tuple(sorted(row[i] for i in ci))


def dist_r(t: UltraTriple, C: Iterable[PointId], v: PointId, r: int) -> Fraction:
    """Sum of the ``|C| - r`` largest distances from ``v`` into ``C``; 0 if ``|C| <= r``."""
    check_r(r)
    ci, vi = _resolve_group(t, C, v)
    if len(ci) <= r:
        return Fraction(0)
    row = t.dist_matrix[vi]
    prof = sorted(row[i] for i in ci)
    return sum(prof[r:], Fraction(0))


def per_r_ordered(t: UltraTriple, seq: Sequence[PointId], r: int) -> Fraction:
    """Perimeter of an ordered sequence: total weight plus per-step removed distances."""
    check_r(r)
    idxs = [t.index(a) for a in seq]
    if len(set(idxs)) != len(idxs):
        raise InputError("duplicate point in sequence")
    d = t.dist_matrix
    total = sum((t.weight_vector[i] for i in idxs), Fraction(0))
    for k, i in enumerate(idxs):
        if k > r:
            row = d[i]
            prof = sorted(row[j] for j in idxs[:k])
            total += sum(prof[r:], Fraction(0))
    return total


def per_r_set(t: UltraTriple, A: Iterable[PointId], r: int) -> Fraction:
    """Perimeter of a set, evaluated on its canonical ordering.

    Every ordering gives the same value (a verified invariant of these
    spaces), so the canonical choice is immaterial.
    """
    return per_r_ordered(t, t.sorted_points(set(A)), r)


class MonotoneFamily:
    """A finite sequence of non-decreasing value maps, one per profile rank.

    ``tables[j]`` maps occurring distance values to their rank-(j+1)
    contribution.  Each table must be non-decreasing over its own domain;
    coverage of a particular triple's values is checked at evaluation time.
    """

    __slots__ = ("tables",)

    def __init__(self, tables: Sequence[Mapping[Fraction, Fraction]]):
        if not tables:
            raise InputError("monotone family needs at least one table")
        frozen = []
        for j, table in enumerate(tables):
            items = sorted((Fraction(k), Fraction(v)) for k, v in table.items())
            if not items:
                raise InputError(f"table {j + 1} is empty")
            for (k0, v0), (k1, v1) in zip(items, items[1:]):
                if v0 > v1:
                    raise InputError(f"table {j + 1} is decreasing: f({k0}) = {v0} > f({k1}) = {v1}")
            frozen.append(dict(items))
        self.tables = tuple(frozen)

    @property
    def depth(self) -> int:
        return len(self.tables)

    def apply(self, j: int, value: Fraction) -> Fraction:
        """Value of the rank-``j`` map (1-based) at ``value``."""
        table = self.tables[j - 1]
        try:
            return table[value]
        except KeyError:
            raise InputError(f"table {j} undefined on distance value {value}") from None

    @classmethod
    def step(cls, r: int, g: Mapping[Fraction, Fraction], depth: int) -> "MonotoneFamily":
        """Family that zeroes the first ``r`` ranks and applies ``g`` above them."""
        check_r(r)
        zero = {Fraction(k): Fraction(0) for k in g}
        table = {Fraction(k): Fraction(v) for k, v in g.items()}
        return cls([zero if j < r else table for j in range(depth)])

    @classmethod
    def identity(cls, values: Iterable[Fraction], depth: int) -> "MonotoneFamily":
        table = {Fraction(v): Fraction(v) for v in values}
        return cls([table] * depth)


def dist_f(t: UltraTriple, C: Iterable[PointId], v: PointId, f: MonotoneFamily) -> Fraction:
    """Generalized removed distance: rank maps applied to the sorted profile."""
    prof = profile(t, C, v)
    if len(prof) > f.depth:
        raise InputError(f"|C| = {len(prof)} exceeds family depth {f.depth}")
    return sum((f.apply(j, dj) for j, dj in enumerate(prof, start=1)), Fraction(0))


def per_f_ordered(t: UltraTriple, seq: Sequence[PointId], f: MonotoneFamily) -> Fraction:
    """Perimeter of an ordered sequence under a monotone family."""
    seq = list(seq)
    if len(seq) > f.depth:
        raise InputError(f"sequence length {len(seq)} exceeds family depth {f.depth}")
    if len(set(seq)) != len(seq):
        raise InputError("duplicate point in sequence")
    total = sum((t.weight(a) for a in seq), Fraction(0))
    for i, a in enumerate(seq):
        total += dist_f(t, seq[:i], a, f)
    return total

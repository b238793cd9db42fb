"""Ultra triples: finite weighted point sets with an ultrametric-style distance.

A triple holds a ground set of labelled points, a weight per point, and a
symmetric distance on unordered pairs of distinct points.  Distances may be
negative; the only structural requirement is the ultrametric triangle
inequality d(a,b) <= max(d(a,c), d(b,c)).  The diagonal is excluded from the
distance domain entirely (asking for d(a,a) is an error).

All values are exact rationals and every object is immutable after
construction, so everything here is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import InputError, UltrametricError

PointId = str


@dataclass(frozen=True)
class Violation:
    """One failed instance of the ultrametric inequality.

    Oriented so that ``d(a, b) = lhs`` is the unique largest side and
    ``rhs = max(d(a,c), d(b,c))`` is what it should not have exceeded.
    """

    points: tuple[PointId, PointId, PointId]
    lhs: Fraction
    rhs: Fraction

    def __str__(self) -> str:
        a, b, c = self.points
        return f"d({a},{b}) = {self.lhs} > max(d({a},{c}), d({b},{c})) = {self.rhs}"


class UltraTriple:
    """Validated immutable triple (points, weights, distances).

    Use :func:`build_triple` to construct one; the constructor trusts its
    arguments.  Points keep their construction order, which defines the
    canonical ordering used for deterministic tie-breaking everywhere else.
    """

    __slots__ = ("points", "_index", "_w", "_d")

    def __init__(self, points: tuple[PointId, ...], weights: tuple[Fraction, ...],
                 matrix: tuple[tuple[Fraction | None, ...], ...]):
        self.points = points
        self._index = {p: i for i, p in enumerate(points)}
        self._w = weights
        self._d = matrix

    def __repr__(self) -> str:
        return f"UltraTriple(n={len(self.points)}, points={list(self.points)!r})"

    def __len__(self) -> int:
        return len(self.points)

    def index(self, a: PointId) -> int:
        """Position of ``a`` in the triple's canonical point order."""
        try:
            return self._index[a]
        except KeyError:
            raise InputError(f"unknown point {a!r}") from None

    def weight(self, a: PointId) -> Fraction:
        return self._w[self.index(a)]

    def distance(self, a: PointId, b: PointId) -> Fraction:
        """Symmetric distance; the diagonal is outside the domain."""
        i, j = self.index(a), self.index(b)
        if i == j:
            raise InputError(f"distance undefined on the diagonal: ({a!r}, {a!r})")
        return self._d[i][j]

    @property
    def dist_matrix(self) -> tuple[tuple[Fraction | None, ...], ...]:
        """Dense symmetric distance table indexed by point position (diagonal None)."""
        return self._d

    @property
    def weight_vector(self) -> tuple[Fraction, ...]:
        return self._w

    def sorted_points(self, subset: Iterable[PointId]) -> list[PointId]:
        """``subset`` in canonical (construction) order."""
        return sorted(subset, key=self.index)

    def pairs(self):
        """Yield ``(a, b, d(a,b))`` over unordered pairs in canonical order."""
        for i, j in combinations(range(len(self.points)), 2):
            yield self.points[i], self.points[j], self._d[i][j]

    def distance_values(self) -> set[Fraction]:
        """Set of distance values occurring in the table."""
        return {d for _, _, d in self.pairs()}


def check_ultrametric(points: Sequence[PointId],
                      distances: Mapping[tuple[PointId, PointId], Fraction]) -> list[Violation]:
    """Check d(a,b) <= max(d(a,c), d(b,c)) over every triple of distinct points.

    ``distances`` maps unordered pairs (either orientation, one entry each) to
    values.  Returns one :class:`Violation` per violating unordered triple,
    instantiated at its maximally violated orientation; for a valid table the
    result is empty.  Tables over one or two points are vacuously valid.
    """
    idx = {p: i for i, p in enumerate(points)}
    if len(idx) != len(points):
        raise InputError("duplicate point label")
    n = len(points)
    d = [[None] * n for _ in range(n)]
    for (a, b), value in distances.items():
        if a not in idx or b not in idx:
            raise InputError(f"distance entry for unknown point: ({a!r}, {b!r})")
        i, j = idx[a], idx[b]
        if i == j:
            raise InputError(f"diagonal entry not allowed: ({a!r}, {b!r})")
        if d[i][j] is not None and d[i][j] != value:
            raise InputError(f"conflicting entries for pair ({a!r}, {b!r})")
        d[i][j] = d[j][i] = value
    for i, j in combinations(range(n), 2):
        if d[i][j] is None:
            raise InputError(f"missing distance entry for pair ({points[i]!r}, {points[j]!r})")

    violations = []
    for i, j, k in combinations(range(n), 3):
        # The inequality holds in all orientations iff the two largest of the
        # three side values are equal; otherwise the unique-max side violates.
        sides = ((d[j][k], i), (d[i][k], j), (d[i][j], k))
        ranked = sorted(sides, key=lambda s: s[0])
        if ranked[2][0] > ranked[1][0]:
            opposite = ranked[2][1]
            a, b = (x for x in (i, j, k) if x != opposite)
            violations.append(Violation(
                points=(points[a], points[b], points[opposite]),
                lhs=d[a][b],
                rhs=max(d[a][opposite], d[b][opposite]),
            ))
    return violations


def build_triple(points: Sequence[PointId],
                 weights: Mapping[PointId, Fraction],
                 distance_entries: Iterable[tuple[PointId, PointId, Fraction]]) -> UltraTriple:
    """Build and fully validate an :class:`UltraTriple`.

    ``distance_entries`` must contain exactly one entry per unordered pair of
    distinct points.  Raises :class:`InputError` on structural problems and
    :class:`UltrametricError` (listing every violating triple) when the table
    is not ultrametric.
    """
    points = tuple(points)
    idx = {p: i for i, p in enumerate(points)}
    if len(idx) != len(points):
        raise InputError("duplicate point label")

    w = []
    for p in points:
        if p not in weights:
            raise InputError(f"missing weight for point {p!r}")
        w.append(Fraction(weights[p]))
    for p in weights:
        if p not in idx:
            raise InputError(f"weight for unknown point {p!r}")

    n = len(points)
    d: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    table: dict[tuple[PointId, PointId], Fraction] = {}
    for a, b, value in distance_entries:
        if a not in idx or b not in idx:
            raise InputError(f"distance entry for unknown point: ({a!r}, {b!r})")
        i, j = idx[a], idx[b]
        if i == j:
            raise InputError(f"diagonal distance entry not allowed: ({a!r}, {b!r})")
        if d[i][j] is not None:
            raise InputError(f"duplicate distance entry for pair ({a!r}, {b!r})")
        d[i][j] = d[j][i] = Fraction(value)
        table[(a, b)] = d[i][j]
    for i, j in combinations(range(n), 2):
        if d[i][j] is None:
            raise InputError(f"missing distance entry for pair ({points[i]!r}, {points[j]!r})")

    violations = check_ultrametric(points, table)
    if violations:
        raise UltrametricError(violations)
    return UltraTriple(points, tuple(w), tuple(tuple(row) for row in d))


def transform_distance(t: UltraTriple, g: Mapping[Fraction, Fraction]) -> UltraTriple:
    """Apply a non-decreasing value map ``g`` to every distance of ``t``.

    ``g`` is a finite breakpoint table; it must be defined on every distance
    value occurring in ``t`` and non-decreasing across those values.  Weights
    are unchanged.  Monotonicity makes the image ultrametric again, but the
    result is re-validated anyway rather than trusted.
    """
    occurring = sorted(t.distance_values())
    for v in occurring:
        if v not in g:
            raise InputError(f"transform table undefined on occurring distance {v}")
    for lo, hi in zip(occurring, occurring[1:]):
        if g[lo] > g[hi]:
            raise InputError(f"transform table decreases between occurring values {lo} and {hi}: "
                             f"{g[lo]} > {g[hi]}")
    entries = [(a, b, g[dist]) for a, b, dist in t.pairs()]
    return build_triple(t.points, {p: t.weight(p) for p in t.points}, entries)

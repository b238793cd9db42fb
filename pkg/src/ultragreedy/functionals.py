"""Point-to-set distance functionals and their structural laws.

A functional assigns an exact value to (triple, subset, outside point).  Two
laws make a functional usable as a perimeter increment: the two-point
exchange identity

    dist(C, x) + dist(C + x, y) = dist(C, y) + dist(C + y, x)

(which makes set perimeters ordering-independent) and monotonicity under
pointwise domination of the distance profile.  Both are checked here by
exhaustive enumeration up to a size cap.

For functionals on integer p-adic triples (odd p) whose value depends only
on the sorted distance profile, the rank-map family behind the functional
can be recovered: evaluate on realized constant profiles and difference
consecutive depths.  The recovery and its round-trip verification evaluate
the functional only on concrete integer configurations, so a claimed
profile-dependence that is false surfaces as a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .padic import PadicSpec, _check_prime, padic_triple, realize_profile
from .perimeter import MonotoneFamily, dist_f, dist_r
from .triple import PointId, UltraTriple


@dataclass(frozen=True)
class DistFunctional:
    """A named point-to-set distance with a profile-dependence claim."""

    name: str
    profile_only: bool
    fn: Callable[[UltraTriple, tuple[PointId, ...], PointId], Fraction]

    def __call__(self, t: UltraTriple, C: Iterable[PointId], v: PointId) -> Fraction:
        return self.fn(t, tuple(C), v)


def removed_distance_functional(r: int) -> DistFunctional:
    return DistFunctional(f"dist_r(r={r})", True, lambda t, C, v: dist_r(t, C, v, r))


def family_functional(f: MonotoneFamily) -> DistFunctional:
    return DistFunctional(f"dist_f(depth={f.depth})", True, lambda t, C, v: dist_f(t, C, v, f))


def nearest_point_functional() -> DistFunctional:
    """min over C of d(c, v), with 0 on the empty set; a known lawbreaker."""
    def fn(t, C, v):
        if not C:
            return Fraction(0)
        return min(t.distance(c, v) for c in C)
    return DistFunctional("nearest", True, fn)


@dataclass(frozen=True)
class ExchangeCounterexample:
    C: tuple[PointId, ...]
    x: PointId
    y: PointId
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class DominationCounterexample:
    C: tuple[PointId, ...]
    x: PointId
    y: PointId
    dist_x: Fraction
    dist_y: Fraction


def _subset_pool(t: UltraTriple, size_cap: int):
    if size_cap + 2 > len(t.points):
        raise InputError(f"size cap {size_cap} needs at least {size_cap + 2} points, triple has {len(t.points)}")
    for k in range(size_cap + 1):
        yield from combinations(t.points, k)


def check_S1(t: UltraTriple, dist: DistFunctional, size_cap: int) -> list[ExchangeCounterexample]:
    """Exhaustively test the two-point exchange identity for |C| <= size_cap."""
    out = []
    for C in _subset_pool(t, size_cap):
        members = set(C)
        rest = [p for p in t.points if p not in members]
        for x, y in combinations(rest, 2):
            lhs = dist(t, C, x) + dist(t, C + (x,), y)
            rhs = dist(t, C, y) + dist(t, C + (y,), x)
            if lhs != rhs:
                out.append(ExchangeCounterexample(C, x, y, lhs, rhs))
    return out


def check_S2(t: UltraTriple, dist: DistFunctional, size_cap: int) -> list[DominationCounterexample]:
    """Exhaustively test monotonicity under pointwise domination for |C| <= size_cap."""
    out = []
    for C in _subset_pool(t, size_cap):
        members = set(C)
        rest = [p for p in t.points if p not in members]
        for x in rest:
            for y in rest:
                if x == y:
                    continue
                if all(t.distance(c, x) <= t.distance(c, y) for c in C):
                    dx, dy = dist(t, C, x), dist(t, C, y)
                    if dx > dy:
                        out.append(DominationCounterexample(C, x, y, dx, dy))
    return out


@dataclass(frozen=True)
class ReconstructedFamily:
    """Rank maps recovered from a profile-determined functional.

    ``monotone`` records whether every table came out non-decreasing, which
    is guaranteed when the source functional satisfies both laws; a False
    here is reported, never silently dropped.
    """

    tables: tuple[dict[Fraction, Fraction], ...]
    monotone: bool
    violation: str | None

    @property
    def depth(self) -> int:
        return len(self.tables)

    def as_monotone_family(self) -> MonotoneFamily:
        if not self.monotone:
            raise InputError(f"reconstructed tables are not monotone: {self.violation}")
        return MonotoneFamily(self.tables)

    def value_on(self, profile: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for j, d in enumerate(profile):
            try:
                total += self.tables[j][Fraction(d)]
            except KeyError:
                raise InputError(f"reconstructed table {j + 1} undefined at {d}") from None
        return total


def _normalized_domain(domain) -> list[int]:
    values = sorted({Fraction(v) for v in domain})
    if not values:
        raise InputError("domain must be non-empty")
    out = []
    for v in values:
        if v.denominator != 1 or v > 0:
            raise InputError(f"domain value {v} is not a non-positive integer")
        out.append(int(v))
    return out


def _canonical_configuration(p: int, profile: Sequence[int]):
    x, points = realize_profile(p, profile)
    return _as_triple(p, x, points)


def _shifted_configuration(p: int, profile: Sequence[int]):
    # Same profile, structurally different witness: units 1, 1+p, 1+2p, ...
    # per value, all congruent to 1 mod p, then the whole set translated.
    counters: dict[int, int] = {}
    points = []
    for v in profile:
        k = counters.get(v, 0)
        counters[v] = k + 1
        points.append((1 + k * p) * p ** (-v))
    shift = 1
    return _as_triple(p, shift, tuple(q + shift for q in points))


def _as_triple(p: int, x: int, points: tuple[int, ...]):
    t = padic_triple(PadicSpec(p=p, h=0, elements=points + (x,)))
    return t, tuple(str(q) for q in points), str(x)


def reconstruct_f(g: DistFunctional, p: int, m_max: int, domain) -> ReconstructedFamily:
    """Recover the rank maps of ``g`` on the given non-positive integer domain.

    Evaluates ``g`` on realized constant profiles (d, ..., d) of each depth
    up to ``m_max`` and differences consecutive depths.  Each profile is
    realized twice with different integer witnesses; a value disagreement
    refutes the functional's profile-only claim and raises.
    """
    _check_prime(p)
    if p == 2:
        raise InputError("reconstruction requires p > 2")
    if not g.profile_only:
        raise InputError(f"functional {g.name!r} does not claim profile dependence")
    if m_max < 1:
        raise InputError("m_max must be at least 1")
    values = _normalized_domain(domain)

    constant_value: dict[tuple[int, int], Fraction] = {}
    for d in values:
        for m in range(1, m_max + 1):
            profile = [d] * m
            t1, c1, x1 = _canonical_configuration(p, profile)
            t2, c2, x2 = _shifted_configuration(p, profile)
            v1 = g(t1, c1, x1)
            v2 = g(t2, c2, x2)
            if v1 != v2:
                raise InputError(
                    f"functional {g.name!r} is not profile-determined: profile {tuple(profile)} "
                    f"evaluates to {v1} and {v2} on two realizations")
            constant_value[(m, d)] = v1

    tables: list[dict[Fraction, Fraction]] = []
    for m in range(1, m_max + 1):
        table = {}
        for d in values:
            total = constant_value[(m, d)]
            below = constant_value[(m - 1, d)] if m > 1 else Fraction(0)
            table[Fraction(d)] = total - below
        tables.append(table)

    monotone, violation = True, None
    for j, table in enumerate(tables, start=1):
        for lo, hi in zip(values, values[1:]):
            if table[Fraction(lo)] > table[Fraction(hi)]:
                monotone = False
                violation = (f"table {j} decreases: f({lo}) = {table[Fraction(lo)]} > "
                             f"f({hi}) = {table[Fraction(hi)]}")
                break
        if not monotone:
            break
    return ReconstructedFamily(tuple(tables), monotone, violation)


def verify_reconstruction(g: DistFunctional, fam: ReconstructedFamily, p: int,
                          n_max: int, domain) -> tuple[bool, tuple[int, ...] | None]:
    """Check g == sum of recovered rank maps on every sorted profile over the domain.

    Realizes each non-decreasing tuple of length <= n_max, evaluates ``g`` on
    the realized configuration, and compares exactly.  Returns (True, None)
    or (False, first_failing_profile).
    """
    _check_prime(p)
    if p == 2:
        raise InputError("verification requires p > 2")
    if n_max > fam.depth:
        raise InputError(f"n_max = {n_max} exceeds reconstructed depth {fam.depth}")
    values = _normalized_domain(domain)
    for m in range(1, n_max + 1):
        for profile in combinations_with_replacement(values, m):
            t, c_labels, x_label = _canonical_configuration(p, list(profile))
            got = g(t, c_labels, x_label)
            expected = fam.value_on([Fraction(d) for d in profile])
            if got != expected:
                return False, profile
    return True, None

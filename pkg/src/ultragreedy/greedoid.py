"""Maximum-perimeter set families and the greedoid axiom checkers.

For each size k, the family collects every k-subset of the ground set whose
perimeter is maximal among k-subsets.  These families satisfy the greedoid
axioms (accessibility and augmentation) and the stronger simultaneous
exchange axiom; the checkers here verify all four on concrete families by
direct enumeration, reporting the first counterexample when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import InputError, MathIntegrityError, NotMaximalError, SizeCapError
from .greedy import GreedyTrace, greedy_order, proj_seq
from .perimeter import check_r, dist_r, per_r_set
from .triple import PointId, UltraTriple

SCAN_CAP = 16


def _ordered(sets: Iterable[frozenset[PointId]]) -> list[frozenset[PointId]]:
    # Deterministic scan order regardless of hash seed, so failure witnesses
    # are reproducible.
    return sorted(sets, key=sorted)


@dataclass(frozen=True)
class MaxPerFamily:
    """All maximum-perimeter subsets, by size, with the attained values."""

    ground: tuple[PointId, ...]
    r: int
    by_size: dict[int, frozenset[frozenset[PointId]]]
    max_value: dict[int, Fraction]

    def members(self) -> Iterable[frozenset[PointId]]:
        for k in sorted(self.by_size):
            yield from sorted(self.by_size[k], key=sorted)

    @property
    def k_max(self) -> int:
        return max(self.by_size)


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    set_a: tuple[PointId, ...]
    set_b: tuple[PointId, ...] | None
    details: str


@dataclass(frozen=True)
class AxiomReport:
    axiom_i: bool
    axiom_ii: bool
    axiom_iii: bool
    axiom_iv: bool
    failure: AxiomFailure | None

    @property
    def all_hold(self) -> bool:
        return self.axiom_i and self.axiom_ii and self.axiom_iii and self.axiom_iv


def max_perimeter_sets(t: UltraTriple, r: int, k_max: int, *, allow_large: bool = False) -> MaxPerFamily:
    """Exhaustively enumerate the maximum-perimeter k-subsets for k = 0..k_max.

    Scans all subsets of each size, so the ground set is capped (override
    with ``allow_large`` at your own expense).
    """
    check_r(r)
    n = len(t.points)
    if n > SCAN_CAP and not allow_large:
        raise SizeCapError(f"{n} points exceeds enumeration cap {SCAN_CAP} (pass allow_large to override)")
    if not 0 <= k_max <= n:
        raise InputError(f"k_max = {k_max} out of range for {n} points")

    by_size: dict[int, frozenset[frozenset[PointId]]] = {0: frozenset({frozenset()})}
    max_value: dict[int, Fraction] = {0: Fraction(0)}
    for k in range(1, k_max + 1):
        best = None
        argmax: list[frozenset[PointId]] = []
        for subset in combinations(t.points, k):
            value = per_r_set(t, subset, r)
            if best is None or value > best:
                best, argmax = value, [frozenset(subset)]
            elif value == best:
                argmax.append(frozenset(subset))
        by_size[k] = frozenset(argmax)
        max_value[k] = best
    return MaxPerFamily(tuple(t.points), r, by_size, max_value)


def check_greedoid_axioms(fam: MaxPerFamily) -> AxiomReport:
    """Verify the four set-system axioms on a family complete up to its k_max.

    (i) the empty set belongs; (ii) every non-empty member stays in the
    family after removing some element; (iii) any member one element larger
    than another can lend it an element; (iv) some single element works for
    both directions of the exchange at once.  Axioms (ii) and (iii) are
    checked directly even though (iv) implies them, so a bug breaking one
    is caught where it happens.
    """
    failure = None

    ok_i = 0 in fam.by_size and frozenset() in fam.by_size[0]
    if not ok_i:
        failure = AxiomFailure("i", (), None, "empty set missing from the family")

    ok_ii = True
    for k in sorted(fam.by_size):
        if k == 0:
            continue
        smaller = fam.by_size.get(k - 1, frozenset())
        for A in _ordered(fam.by_size[k]):
            if not any(A - {a} in smaller for a in A):
                ok_ii = False
                if failure is None:
                    failure = AxiomFailure("ii", tuple(sorted(A)), None,
                                           "no element can be removed without leaving the family")
                break
        if not ok_ii:
            break

    ok_iii = True
    ok_iv = True
    for k in sorted(fam.by_size):
        if (k + 1) not in fam.by_size:
            continue
        larger = fam.by_size[k + 1]
        for A in _ordered(larger):
            for B in _ordered(fam.by_size[k]):
                diff = A - B
                if ok_iii and not any(B | {a} in larger for a in diff):
                    ok_iii = False
                    if failure is None:
                        failure = AxiomFailure("iii", tuple(sorted(A)), tuple(sorted(B)),
                                               "no element of A \\ B augments B inside the family")
                if ok_iv and not any(B | {a} in larger and A - {a} in fam.by_size[k] for a in diff):
                    ok_iv = False
                    if failure is None:
                        failure = AxiomFailure("iv", tuple(sorted(A)), tuple(sorted(B)),
                                               "no single element both augments B and leaves A maximal")
    return AxiomReport(ok_i, ok_ii, ok_iii, ok_iv, failure)


def check_prefix_theorem(t: UltraTriple, A: Iterable[PointId], r: int,
                         fam: MaxPerFamily | None = None) -> GreedyTrace:
    """Produce a full greedy ordering of the ground set that starts with ``A``.

    ``A`` must attain the maximum perimeter among subsets of its size
    (:class:`NotMaximalError` otherwise; ``fam`` may supply the precomputed
    family).  The witness is built constructively: project a greedy prefix
    onto ``A``, confirm each projected point is itself a valid greedy choice,
    then continue greedily.  A confirmation failure would falsify the theory
    this package implements, so it aborts loudly as :class:`MathIntegrityError`
    rather than returning anything.
    """
    check_r(r)
    a_set = set(A)
    k = len(a_set)
    if fam is None:
        fam = max_perimeter_sets(t, r, k)
    if fam.r != r or k not in fam.max_value:
        raise InputError("family does not cover this r and size")
    if per_r_set(t, a_set, r) != fam.max_value[k]:
        raise NotMaximalError(
            f"{sorted(a_set)} does not attain the maximum perimeter {fam.max_value[k]} among {k}-subsets")

    base = greedy_order(t, t.points, k, r)
    prefix = list(proj_seq(t, base.perm, a_set)) if k else []
    if set(prefix) != a_set:
        raise MathIntegrityError("projection of the greedy prefix did not exhaust A")

    perm: list[PointId] = []
    incs: list[Fraction] = []
    remaining = list(t.points)
    for step, forced in enumerate(prefix):
        scored = [(x, t.weight(x) + dist_r(t, perm, x, r)) for x in remaining]
        best = max(val for _, val in scored)
        forced_val = dict(scored)[forced]
        if forced_val != best:
            raise MathIntegrityError(
                f"projected point {forced!r} is not a greedy choice at step {step + 1}: "
                f"{forced_val} < {best}")
        perm.append(forced)
        incs.append(forced_val)
        remaining.remove(forced)

    while remaining:
        scored = [(x, t.weight(x) + dist_r(t, perm, x, r)) for x in remaining]
        best = max(val for _, val in scored)
        choice = next(x for x, val in scored if val == best)
        perm.append(choice)
        incs.append(best)
        remaining.remove(choice)
    return GreedyTrace(tuple(perm), tuple(incs))

"""Ultra triples over finite integer sets with p-adic distances.

The distance between distinct integers a, b is -max(h, nu_p(a - b)) for a
prime p and truncation level h >= 0; with h = 0 this is minus the p-adic
valuation of the difference.  Note the formula applies max to the valuation
and then negates, i.e. it equals min(-h, -nu_p(a - b)): a monotone clamp of
the untruncated distance, hence still ultrametric.

Also provides the two explicit constructions used to realize prescribed
distance profiles inside (Z, -nu_p) for p > 2, and the digit-sum formula
for nu_p(k!) used as an independent cross-check of greedy increments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InputError
from .rational import parse_rational
from .triple import UltraTriple, build_triple


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check (inputs are desk-scale)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise InputError(f"p = {p!r} is not a prime")
    return p


def nu_p(n: int, p: int) -> int:
    """Largest e with p**e dividing n; undefined (error) at n = 0."""
    _check_prime(p)
    if n == 0:
        raise InputError("valuation of zero is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class PadicSpec:
    """Parameters of a p-adic triple: prime, truncation level, integer points."""

    p: int
    h: int
    elements: tuple[int, ...]
    weights: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        _check_prime(self.p)
        if not isinstance(self.h, int) or isinstance(self.h, bool) or self.h < 0:
            raise InputError(f"h must be a non-negative integer, got {self.h!r}")
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise InputError("duplicate elements")
        for e in elements:
            if not isinstance(e, int) or isinstance(e, bool):
                raise InputError(f"element {e!r} is not an integer")
        object.__setattr__(self, "elements", elements)
        for e in self.weights:
            if e not in set(elements):
                raise InputError(f"weight for unknown element {e!r}")


def padic_triple(spec: PadicSpec) -> UltraTriple:
    """Build the triple with d(a, b) = -max(h, nu_p(a - b)) on the given elements.

    Points are labelled by their decimal representation and ordered
    numerically, so canonical tie-breaking follows the integers themselves.
    """
    ordered = sorted(spec.elements)
    labels = {e: str(e) for e in ordered}
    weights = {labels[e]: Fraction(spec.weights.get(e, Fraction(0))) for e in ordered}
    entries = []
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            entries.append((labels[a], labels[b], Fraction(-max(spec.h, nu_p(a - b, spec.p)))))
    return build_triple([labels[e] for e in ordered], weights, entries)


def _as_nonpositive_int(value, where: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise InputError(f"{where}: {value} is not an integer")
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    if value > 0:
        raise InputError(f"{where}: {value} is positive")
    return value


def witness_point(p: int, a: int, b: int, ell) -> int:
    """An integer c with nu_p(a - c) = -ell and nu_p(b - c) = nu_p(a - b).

    Needs ell <= -nu_p(a - b), i.e. c must sit at least as close to a as b
    does.  When the requested distance is strictly closer, c = a + p**(-ell)
    works outright; at equal closeness c = a + s * p**(-ell) for the least
    positive s whose residue avoids both 0 and the unit part of b - a, which
    exists only for p > 2.
    """
    _check_prime(p)
    if a == b:
        raise InputError("a and b must be distinct")
    ell = _as_nonpositive_int(ell, "ell")
    q = -ell
    e = nu_p(a - b, p)
    if q < e:
        raise InputError(f"ell = {ell} exceeds the distance d(a, b) = {-e}")
    if q > e:
        return a + p ** q
    if p == 2:
        raise InputError("p = 2 leaves no admissible residue in the equal-valuation case")
    u = ((b - a) // p ** e) % p
    s = 1
    while s % p == 0 or s % p == u:
        s += 1
    return a + s * p ** e


def realize_profile(p: int, profile: Sequence) -> tuple[int, tuple[int, ...]]:
    """Integers (x, C) whose sorted distances from x reproduce ``profile``.

    ``profile`` must be non-empty, sorted non-decreasing, with non-positive
    integer entries; p must be an odd prime.  The construction places x at 0
    and builds each point as unit * p**(-value): the largest value gets unit
    1, its repeats get units avoiding residues 0 and 1, and smaller values
    get the smallest unused units that are nonzero mod p.  Returned points
    follow the profile order.
    """
    _check_prime(p)
    if p == 2:
        raise InputError("profile realization requires p > 2")
    values = [_as_nonpositive_int(v, f"profile[{i}]") for i, v in enumerate(profile)]
    if not values:
        raise InputError("profile must be non-empty")
    if any(lo > hi for lo, hi in zip(values, values[1:])):
        raise InputError("profile must be sorted non-decreasing")

    top = values[-1]
    points: list[int] = []
    used: dict[int, int] = {}

    def next_unit(value: int, forbidden_residues: tuple[int, ...]) -> int:
        s = used.get(value, 0)
        while True:
            s += 1
            if all(s % p != f for f in forbidden_residues):
                used[value] = s
                return s

    for v in values:
        if v == top:
            s = next_unit(v, (0,) if used.get(v, 0) == 0 else (0, 1))
        else:
            s = next_unit(v, (0,))
        points.append(s * p ** (-v))
    return 0, tuple(points)


def legendre_nu_factorial(k: int, p: int) -> int:
    """nu_p(k!) via the floor-sum formula; an oracle independent of any triple."""
    _check_prime(p)
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"k must be a non-negative integer, got {k!r}")
    total = 0
    q = p
    while q <= k:
        total += k // q
        q *= p
    return total


def padic_spec_from_json(obj: Mapping, where: str = "padic spec") -> PadicSpec:
    """Parse the p-adic file schema {"p", "h", "elements", optional "weights"}."""
    for key in ("p", "h", "elements"):
        if key not in obj:
            raise InputError(f"{where}: missing field {key!r}")
    p, h = obj["p"], obj["h"]
    for name, val in (("p", p), ("h", h)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise InputError(f"{where}.{name}: expected an integer, got {val!r}")
    elements = obj["elements"]
    if not isinstance(elements, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in elements):
        raise InputError(f"{where}.elements: expected an array of integers")
    weights: dict[int, Fraction] = {}
    for key, val in (obj.get("weights") or {}).items():
        try:
            element = int(key)
        except ValueError:
            raise InputError(f"{where}.weights: key {key!r} is not an integer element") from None
        weights[element] = parse_rational(val, f"{where}.weights[{key}]")
    return PadicSpec(p=p, h=h, elements=tuple(elements), weights=weights)

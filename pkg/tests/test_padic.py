import random
from fractions import Fraction

import pytest

from ultragreedy import (
    InputError,
    PadicSpec,
    check_ultrametric,
    increment_signature,
    is_prime,
    legendre_nu_factorial,
    nu_p,
    padic_triple,
    profile,
    realize_profile,
    transform_distance,
    witness_point,
)

F = Fraction


def test_is_prime_small_values():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_nu_p_golden():
    assert nu_p(24, 2) == 3
    assert nu_p(1, 7) == 0
    assert nu_p(-18, 3) == 2
    with pytest.raises(InputError):
        nu_p(0, 2)
    with pytest.raises(InputError):
        nu_p(8, 4)


def test_padic_spec_validation():
    with pytest.raises(InputError):
        PadicSpec(p=4, h=0, elements=(0, 1))
    with pytest.raises(InputError):
        PadicSpec(p=2, h=-1, elements=(0, 1))
    with pytest.raises(InputError):
        PadicSpec(p=2, h=0, elements=(0, 0))
    with pytest.raises(InputError):
        PadicSpec(p=2, h=0, elements=(0, 1), weights={5: F(1)})


def test_padic_triple_h0_golden():
    t = padic_triple(PadicSpec(p=2, h=0, elements=(0, 1, 2, 4)))
    expected = {("0", "1"): F(0), ("0", "2"): F(-1), ("0", "4"): F(-2),
                ("1", "2"): F(0), ("1", "4"): F(0), ("2", "4"): F(-1)}
    assert {(a, b): d for a, b, d in t.pairs()} == expected


def test_padic_triple_h1_golden():
    t = padic_triple(PadicSpec(p=2, h=1, elements=(0, 1, 2)))
    assert {d for _, _, d in t.pairs()} == {F(-1)}


def test_padic_triple_weights_and_ordering():
    t = padic_triple(PadicSpec(p=3, h=0, elements=(9, -1, 0), weights={9: F(1, 2)}))
    assert t.points == ("-1", "0", "9")  # numeric order, not insertion order
    assert t.weight("9") == F(1, 2)
    assert t.weight("0") == F(0)


def test_truncation_is_a_monotone_clamp_of_h0():
    rng = random.Random(550)
    for _ in range(20):
        p = rng.choice((2, 3, 5))
        h = rng.randint(0, 3)
        elements = tuple(rng.sample(range(-40, 40), rng.randint(2, 7)))
        base = padic_triple(PadicSpec(p=p, h=0, elements=elements))
        g = {v: min(F(-h), v) for v in base.distance_values()}
        clamped = transform_distance(base, g)
        direct = padic_triple(PadicSpec(p=p, h=h, elements=elements))
        assert {x for x in clamped.pairs()} == {x for x in direct.pairs()}
        table = {(a, b): d for a, b, d in direct.pairs()}
        assert check_ultrametric(direct.points, table) == []


# ---------------------------------------------------------------- witnesses

def test_witness_point_golden():
    assert witness_point(3, 0, 1, -2) == 9
    assert witness_point(3, 0, 3, -1) == 6
    with pytest.raises(InputError):
        witness_point(3, 0, 1, 1)  # positive requested distance
    with pytest.raises(InputError):
        witness_point(3, 0, 9, -1)  # requested distance above d(a, b) = -2
    with pytest.raises(InputError):
        witness_point(3, 5, 5, -1)
    with pytest.raises(InputError):
        witness_point(2, 0, 1, 0)  # equal-valuation case impossible at p = 2


def test_witness_point_p2_strict_case_still_works():
    c = witness_point(2, 0, 1, -3)
    assert nu_p(0 - c, 2) == 3 and nu_p(1 - c, 2) == 0


def test_witness_point_postconditions_randomized():
    rng = random.Random(551)
    for _ in range(300):
        p = rng.choice((3, 5, 7))
        a = rng.randint(-50, 50)
        b = a + rng.choice((1, -1)) * rng.randint(1, 60)
        e = nu_p(a - b, p)
        ell = -rng.randint(e, e + 3)
        c = witness_point(p, a, b, ell)
        assert c not in (a, b)
        assert nu_p(a - c, p) == -ell
        assert nu_p(b - c, p) == e


# ---------------------------------------------------------------- profiles

def test_realize_profile_golden():
    assert realize_profile(3, [-1]) == (0, (3,))
    assert realize_profile(3, [-2, -1, 0]) == (0, (9, 3, 1))
    assert realize_profile(3, [0, 0]) == (0, (1, 2))
    with pytest.raises(InputError):
        realize_profile(3, [])
    with pytest.raises(InputError):
        realize_profile(3, [0, -1])  # not sorted non-decreasing
    with pytest.raises(InputError):
        realize_profile(3, [1])
    with pytest.raises(InputError):
        realize_profile(2, [0])


def test_realize_profile_round_trip_randomized():
    rng = random.Random(552)
    for _ in range(300):
        p = rng.choice((3, 5, 7))
        length = rng.randint(1, 6)
        requested = tuple(sorted(rng.randint(-4, 0) for _ in range(length)))
        x, points = realize_profile(p, requested)
        assert len(set(points)) == length and x not in points
        t = padic_triple(PadicSpec(p=p, h=0, elements=points + (x,)))
        got = profile(t, [str(q) for q in points], str(x))
        assert got == tuple(F(v) for v in requested)


# ---------------------------------------------------------------- Legendre

def test_legendre_golden():
    assert legendre_nu_factorial(4, 2) == 3
    assert legendre_nu_factorial(0, 3) == 0
    assert legendre_nu_factorial(10, 5) == 2


def test_legendre_matches_direct_factorial_valuation():
    import math
    for p in (2, 3, 5):
        for k in range(1, 40):
            assert legendre_nu_factorial(k, p) == nu_p(math.factorial(k), p)


def test_natural_ordering_signature_matches_legendre_small():
    for p in (2, 3):
        t = padic_triple(PadicSpec(p=p, h=0, elements=tuple(range(12))))
        sig = increment_signature(t, t.points, 12, 0)
        assert sig == tuple(F(-legendre_nu_factorial(k, p)) for k in range(12))

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from ultragreedy import (
    InputError,
    MonotoneFamily,
    build_triple,
    brute_dist_r,
    dist_f,
    dist_r,
    per_f_ordered,
    per_r_ordered,
    per_r_set,
    profile,
    transform_distance,
)

from conftest import random_monotone_map, random_ultra_triple

F = Fraction


def test_profile_golden(nu2_triple):
    assert profile(nu2_triple, ["0", "1", "2"], "4") == (F(-2), F(-1), F(0))
    assert profile(nu2_triple, [], "4") == ()
    assert profile(nu2_triple, ["0"], "1") == (F(0),)
    with pytest.raises(InputError):
        profile(nu2_triple, ["0", "1"], "1")


def test_dist_r_golden(nu2_triple):
    C = ["0", "1", "2"]
    assert dist_r(nu2_triple, C, "4", 0) == F(-3)
    assert dist_r(nu2_triple, C, "4", 1) == F(-1)
    assert dist_r(nu2_triple, C, "4", 3) == F(0)
    assert dist_r(nu2_triple, C, "4", 7) == F(0)
    with pytest.raises(InputError):
        dist_r(nu2_triple, C, "4", -1)
    with pytest.raises(InputError):
        dist_r(nu2_triple, C, "2", 0)


def test_per_r_ordered_golden(nu2_triple):
    assert per_r_ordered(nu2_triple, [], 2) == F(0)
    assert per_r_ordered(nu2_triple, ["0", "1", "2", "4"], 1) == F(-1)
    # a different ordering of the same set agrees
    assert per_r_ordered(nu2_triple, ["0", "2", "4", "1"], 1) == F(-1)
    with pytest.raises(InputError):
        per_r_ordered(nu2_triple, ["0", "0", "1"], 0)


def test_per_r_set_golden(nu2_triple):
    assert per_r_set(nu2_triple, ["0", "1", "2", "3"], 0) == F(-2)
    assert per_r_set(nu2_triple, [], 0) == F(0)
    t = build_triple(["a"], {"a": F(5)}, [])
    assert per_r_set(t, ["a"], 0) == F(5)


def test_dist_r_matches_subset_enumeration_oracle():
    rng = random.Random(7201)
    for _ in range(30):
        t = random_ultra_triple(rng, rng.randint(2, 7))
        points = list(t.points)
        v = rng.choice(points)
        others = [p for p in points if p != v]
        C = rng.sample(others, rng.randint(0, len(others)))
        r = rng.randint(0, 4)
        assert dist_r(t, C, v, r) == brute_dist_r(t, C, v, r).value


def test_transposition_identity_for_dist_r():
    # dist_r(C,a) + dist_r(C+a,b) == dist_r(C,b) + dist_r(C+b,a)
    rng = random.Random(7202)
    for _ in range(25):
        t = random_ultra_triple(rng, rng.randint(3, 7))
        points = list(t.points)
        a, b = rng.sample(points, 2)
        rest = [p for p in points if p not in (a, b)]
        C = rng.sample(rest, rng.randint(0, len(rest)))
        for r in range(4):
            lhs = dist_r(t, C, a, r) + dist_r(t, C + [a], b, r)
            rhs = dist_r(t, C, b, r) + dist_r(t, C + [b], a, r)
            assert lhs == rhs


def test_domination_monotonicity_for_dist_r():
    rng = random.Random(7203)
    checked = 0
    for _ in range(60):
        t = random_ultra_triple(rng, rng.randint(3, 6))
        points = list(t.points)
        for x, y in permutations(points, 2):
            rest = [p for p in points if p not in (x, y)]
            for k in range(len(rest) + 1):
                for C in combinations(rest, k):
                    if all(t.distance(c, x) <= t.distance(c, y) for c in C):
                        for r in range(3):
                            assert dist_r(t, C, x, r) <= dist_r(t, C, y, r)
                        checked += 1
    assert checked > 100


def test_permutation_invariance_small_exhaustive():
    rng = random.Random(7204)
    for _ in range(10):
        t = random_ultra_triple(rng, 5)
        for k in range(len(t.points) + 1):
            for A in combinations(t.points, k):
                for r in (0, 1, 2):
                    values = {per_r_ordered(t, seq, r) for seq in permutations(A)}
                    assert len(values) == 1 or A == ()


# ---------------------------------------------------------------- dist_f


def test_monotone_family_validation():
    with pytest.raises(InputError):
        MonotoneFamily([])
    with pytest.raises(InputError):
        MonotoneFamily([{}])
    with pytest.raises(InputError):
        MonotoneFamily([{F(-1): F(1), F(0): F(0)}])  # decreasing
    fam = MonotoneFamily([{F(-1): F(0), F(0): F(0)}, {F(-1): F(-1), F(0): F(2)}])
    assert fam.depth == 2
    with pytest.raises(InputError):
        fam.apply(1, F(5))  # outside the table domain


def test_dist_f_identity_family_equals_r0(nu2_triple):
    values = nu2_triple.distance_values()
    fam = MonotoneFamily.identity(values, 3)
    assert dist_f(nu2_triple, ["0", "1", "2"], "4", fam) == F(-3)
    assert dist_f(nu2_triple, [], "4", fam) == F(0)


def test_dist_f_step_family_equals_r1(nu2_triple):
    values = nu2_triple.distance_values()
    fam = MonotoneFamily.step(1, {v: v for v in values}, 3)
    assert dist_f(nu2_triple, ["0", "1", "2"], "4", fam) == F(-1)
    with pytest.raises(InputError):
        dist_f(nu2_triple, ["0", "1", "2", "3"], "4", fam)  # depth exceeded


def test_per_f_ordered_golden(nu2_triple):
    values = nu2_triple.distance_values()
    identity = MonotoneFamily.identity(values, 4)
    seq = ["0", "1", "2", "4"]
    assert per_f_ordered(nu2_triple, seq, identity) == per_r_ordered(nu2_triple, seq, 0)
    assert per_f_ordered(nu2_triple, [], identity) == F(0)
    step = MonotoneFamily.step(1, {v: v for v in values}, 4)
    assert per_f_ordered(nu2_triple, seq, step) == F(-1)


def test_step_family_identity_against_transformed_triple():
    # dist_f with (0,...,0,g,g,...) equals dist_r on the g-transformed triple.
    rng = random.Random(7205)
    for _ in range(20):
        t = random_ultra_triple(rng, rng.randint(3, 6))
        g = random_monotone_map(rng, t.distance_values())
        r = rng.randint(0, 3)
        fam = MonotoneFamily.step(r, g, len(t.points))
        transformed = transform_distance(t, g)
        points = list(t.points)
        v = rng.choice(points)
        others = [p for p in points if p != v]
        for k in range(len(others) + 1):
            C = rng.sample(others, k)
            assert dist_f(t, C, v, fam) == dist_r(transformed, C, v, r)

import random
from fractions import Fraction as F

from hypothesis import given

import oracles
from conftest import interval_sets, measure_preserving_maps
from lmp.analysis import density_points, density_identity_check, truncated_density_set
from lmp.constructions import densify, random_walk_map
from lmp.core import IntervalSet, PAMap

T = PAMap.tent()


def test_examples():
    assert density_points(IntervalSet.full()).to_json() == [
        {"lo": "0/1", "hi": "1/1", "loClosed": True, "hiClosed": True}
    ]
    merged = density_points(IntervalSet([(0, F(1, 2)), (F(1, 2), 1)]))
    assert F(1, 2) in merged and 0 in merged and 1 in merged
    d = density_points(IntervalSet([(F(1, 4), F(1, 2))]))
    assert F(1, 4) not in d and F(1, 2) not in d and F(3, 8) in d
    assert d.measure == F(1, 4)


def test_point_components_have_no_density():
    d = density_points(IntervalSet([(F(1, 3), F(1, 3)), (F(1, 2), 1)]))
    assert F(1, 3) not in d and d.measure == F(1, 2)


@given(interval_sets())
def test_density_points_against_window_ratios(A):
    d = density_points(A)
    assert d.measure == A.measure - sum((v - u for u, v in A if u == v), F(0))
    r = F(1, 10**6)
    for k in range(0, 65):
        x = F(k, 64)
        ratio = oracles.window_ratio(A.components, x, r)
        assert (ratio == 1) == (x in d)


@given(interval_sets())
def test_truncated_sets_approach_density_points(A):
    inner = truncated_density_set(A, 10**4, 10**3)
    d = density_points(A)
    for k in range(1, 64):
        x = F(k, 64) + F(1, 1000)
        if x in inner:
            assert oracles.window_ratio(A.components, x, F(1, 10**4)) > 1 - F(1, 10**3)
        if x in d:
            assert x in inner or min(abs(x - e) for c in A for e in c) <= F(1, 10**4)


def test_identity_tent_example():
    res = density_identity_check(T, IntervalSet([(0, F(1, 2))]))
    assert res.holds and res.measure_B == F(1, 2)
    assert F(1, 4) in res.B and F(1, 2) not in res.B


@given(interval_sets())
def test_identity_holds_for_identity_map(A):
    assert density_identity_check(PAMap.identity(), A).holds


@given(measure_preserving_maps(), interval_sets())
def test_identity_holds_for_generated_maps(f, A):
    assert density_identity_check(f, A).holds


def test_identity_holds_for_densified_maps():
    rng = random.Random(4)
    f = densify(random_walk_map(rng, cells=3, steps=4), F(1, 4), 1)
    for _ in range(10):
        a = F(rng.randint(0, 50), 100)
        A = IntervalSet([(a, a + F(rng.randint(1, 50), 100))])
        assert density_identity_check(f, A).holds

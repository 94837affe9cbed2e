from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import pa_maps
from lmp.analysis import blowup_statistic, dini_envelopes, knot_fraction
from lmp.constructions import seed
from lmp.core import PAMap


def test_identity_quotients_are_one():
    for env in dini_envelopes(PAMap.identity(), 9, [0, 3], 8):
        for entry in env.table:
            assert all(q == 1 for q in entry if q is not None)


def test_affine_map_quotients_equal_slope():
    f = PAMap([(0, F(1, 4)), (1, F(3, 4))])
    for env in dini_envelopes(f, 7, [1, 2], 6):
        for entry in env.table:
            assert all(q == F(1, 2) for q in entry if q is not None)


def test_ladder_monotone_in_increments():
    f = seed(2)
    coarse = dini_envelopes(f, 11, [2], 3)
    fine = dini_envelopes(f, 11, [2], 12)
    for a, b in zip(coarse, fine):
        (mr0, nr0, ml0, nl0), (mr1, nr1, ml1, nl1) = a.table[0], b.table[0]
        assert mr1 >= mr0 >= nr0 >= nr1
        assert ml1 >= ml0 >= nl0 >= nl1


@settings(max_examples=30)
@given(pa_maps())
def test_envelopes_bounded_by_max_slope(f):
    bound = f.max_abs_slope()
    for env in dini_envelopes(f, 9, [0, 2, 4], 10):
        for entry in env.table:
            assert all(abs(q) <= bound for q in entry if q is not None)


def test_seed_blowup_statistic_increases():
    stats = [blowup_statistic(dini_envelopes(seed(k), 100, [k], 40), k) for k in range(0, 7)]
    assert all(a < b for a, b in zip(stats, stats[1:]))
    assert all(s > 2 ** (k / 2) for k, s in enumerate(stats))


def test_knot_fraction():
    env = dini_envelopes(PAMap.tent(), 9, [0, 2], 5)
    assert knot_fraction(env, 1) == 0.0
    assert knot_fraction(env, F(-3)) == 1.0


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        dini_envelopes(PAMap.tent(), 0, [1])
    with pytest.raises(ValueError):
        dini_envelopes(PAMap.tent(), 3, [-1])

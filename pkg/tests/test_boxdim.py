import random
from fractions import Fraction as F

from hypothesis import given, settings

import oracles
from conftest import pa_maps
from lmp.analysis import box_count, box_dimension
from lmp.constructions import random_walk_map, seed
from lmp.core import PAMap


def test_identity_counts():
    for j in range(0, 7):
        assert box_count(PAMap.identity(), j) == 2 * 2**j - 1


@settings(max_examples=25)
@given(pa_maps())
def test_counts_match_brute_force(f):
    pts = oracles.pts(f)
    for j in range(0, 5):
        assert box_count(f, j) == oracles.box_count(pts, j)


def test_seed_counts_match_brute_force():
    f = seed(1)
    for j in range(0, 6):
        assert box_count(f, j) == oracles.box_count(oracles.pts(f), j)


def test_pl_slopes_near_one():
    maps = [
        PAMap.identity(),
        PAMap.tent(),
        PAMap([(0, 0), (F(1, 2), 1), (1, 1)]),
        random_walk_map(random.Random(2), cells=3, steps=5),
    ]
    for f in maps:
        assert abs(box_dimension(f, range(1, 13)).slope - 1) < 0.05


def test_seed_slope_is_between_one_and_two():
    s = box_dimension(seed(6), range(1, 13)).slope
    assert 1 < s < 2

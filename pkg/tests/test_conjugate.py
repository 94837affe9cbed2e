from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import measure_preserving_maps
from lmp.constructions import PLHomeomorphism, ci_besicovitch, conjugate, random_homeomorphism
from lmp.core import PAMap, certify_preservation, compose


def test_homeomorphism_validation():
    with pytest.raises(ValueError):
        PLHomeomorphism([(0, 0), (F(1, 2), F(3, 4)), (1, F(1, 2))])
    with pytest.raises(ValueError):
        PLHomeomorphism([(0, F(1, 4)), (1, 1)])


def test_inverse():
    p = PLHomeomorphism([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])
    assert compose(p.inverse(), p) == PAMap.identity()


@given(measure_preserving_maps(), st.integers(0, 2**32 - 1))
def test_conjugate_preserves_pushed_density(f, seed):
    import random

    p = random_homeomorphism(random.Random(seed))
    res = conjugate(f, p)
    assert certify_preservation(res.q, res.density).passed
    assert res.q.lap_count() == f.lap_count()


def test_ci_besicovitch_range_and_values():
    f = ci_besicovitch((0, F(1, 2)), F(1, 4), F(1, 4), 2)
    assert f(0) == F(1, 2) and f(1) == F(1, 2)
    assert f(F(1, 4)) == F(3, 4) and f(F(3, 4)) == F(1, 4)
    with pytest.raises(ValueError):
        ci_besicovitch((0, F(1, 2)), 1, 1, 1)


def test_conjugate_by_identity():
    f = PAMap([(0, 0), (F(1, 3), 1), (1, 0)])
    assert conjugate(f, PLHomeomorphism.identity()).q == f


def test_fixed_points_correspond():
    f = PAMap.tent()
    p = PLHomeomorphism([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
    q = conjugate(f, p).q
    for x in (0, F(2, 3)):
        assert f(x) == x
        y = p.inverse()(x)
        assert q(y) == y


def test_ci_besicovitch_examples():
    g = ci_besicovitch((F(1, 2), F(1, 4)), 0, 0, 2)
    assert g == PAMap([(0, F(1, 4)), (1, F(3, 4))])
    f = ci_besicovitch((1, 0), F(1, 4), F(1, 4), 3)
    assert not certify_preservation(f).passed
    assert f.lap_count() > 1

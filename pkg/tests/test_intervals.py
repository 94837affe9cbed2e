from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import interval_sets
from lmp.core import IntervalSet


def test_merges_touching_components():
    s = IntervalSet([(F(1, 2), 1), (0, F(1, 2))])
    assert s.components == ((0, 1),)
    assert s == IntervalSet.full()


def test_rejects_out_of_range_and_reversed():
    with pytest.raises(ValueError):
        IntervalSet([(F(-1, 2), F(1, 2))])
    with pytest.raises(ValueError):
        IntervalSet([(F(3, 4), F(1, 4))])


def test_membership_and_measure():
    s = IntervalSet([(0, F(1, 4)), (F(1, 2), F(1, 2)), (F(3, 4), 1)])
    assert F(1, 8) in s and F(1, 2) in s and F(5, 8) not in s
    assert s.measure == F(1, 2)
    assert s.degenerate == (F(1, 2),)


def test_closure_complement():
    s = IntervalSet([(F(1, 4), F(1, 2))])
    assert s.closure_complement() == IntervalSet([(0, F(1, 4)), (F(1, 2), 1)])


@given(interval_sets(), interval_sets())
def test_intersection_and_union_measures(a, b):
    assert (a | b).measure + (a & b).measure == a.measure + b.measure
    assert (a & b).measure <= min(a.measure, b.measure)


@given(interval_sets())
def test_json_roundtrip(a):
    assert IntervalSet.from_json(a.to_json()) == a

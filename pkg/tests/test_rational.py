from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from lmp.core.rational import (
    DenominatorOverflow,
    Q,
    check_denominator,
    denominator_guard,
    format_rational,
    parse_rational,
)


def test_parse_forms():
    assert parse_rational("3/6") == mpq(1, 2)
    assert parse_rational("-2") == mpq(-2)
    assert parse_rational(" 7 / 3 ") == mpq(7, 3)


@pytest.mark.parametrize("text", ["0.5", "1e3", "a/b", "", "1/2/3"])
def test_parse_rejects_non_rationals(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_always_has_denominator():
    assert format_rational(2) == "2/1"
    assert format_rational(mpq(-3, 6)) == "-1/2"


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_format_parse_roundtrip(p, q):
    v = mpq(p, q)
    assert parse_rational(format_rational(v)) == v


def test_coercion():
    assert Q(Fraction(3, 4)) == mpq(3, 4)
    assert Q("1/3") == mpq(1, 3)
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_guard(monkeypatch):
    monkeypatch.setenv("LMP_DENOM_GUARD", "2**10")
    assert denominator_guard() == 1024
    check_denominator(mpq(1, 1024))
    with pytest.raises(DenominatorOverflow):
        check_denominator(mpq(1, 1025))

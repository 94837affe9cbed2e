"""Exact rational scalars.

All geometry in the package is carried by ``gmpy2.mpq``: arbitrary precision,
always in lowest terms with a positive denominator. Floats are refused at
every entry point so that no rounding can leak into a certificate.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction
from numbers import Rational

import gmpy2
from gmpy2 import mpq

__all__ = [
    "Q",
    "ZERO",
    "ONE",
    "HALF",
    "DenominatorOverflow",
    "denominator_guard",
    "check_denominator",
    "parse_rational",
    "format_rational",
    "floor_int",
]

MPQ = type(mpq(0))
MPZ = type(gmpy2.mpz(0))

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)

# 2**512: roughly 154 decimal digits.
DEFAULT_DENOM_GUARD = 2**512

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class DenominatorOverflow(ArithmeticError):
    """A rational denominator exceeded the configured guard."""

    def __init__(self, denominator, limit):
        self.denominator = denominator
        self.limit = limit
        digits = len(str(denominator))
        super().__init__(
            f"denominator with {digits} digits exceeds guard {limit} "
            "(raise it with LMP_DENOM_GUARD)"
        )


def denominator_guard() -> int:
    """Current denominator limit; ``LMP_DENOM_GUARD`` overrides the default."""
    raw = os.environ.get("LMP_DENOM_GUARD")
    if raw is None:
        return DEFAULT_DENOM_GUARD
    raw = raw.strip()
    if "**" in raw:
        base, exp = raw.split("**", 1)
        return int(base) ** int(exp)
    return int(raw)


def check_denominator(value, limit: int | None = None):
    limit = denominator_guard() if limit is None else limit
    if value.denominator > limit:
        raise DenominatorOverflow(value.denominator, limit)
    return value


def parse_rational(text: str) -> mpq:
    """Parse ``"p/q"`` or ``"p"``. Decimal notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational 'p/q': {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    """Canonical ``"num/den"`` rendering (denominator always present)."""
    value = Q(value)
    return f"{value.numerator}/{value.denominator}"


def Q(value) -> mpq:
    """Coerce ``value`` to an exact rational.

    Accepts ints, ``mpq``/``mpz``, :class:`fractions.Fraction` and ``"p/q"``
    strings. Floats raise ``TypeError``.
    """
    if type(value) is MPQ:
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, MPZ)):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: pass an exact rational")
    if isinstance(value, Rational):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def floor_int(value) -> int:
    """Exact floor of a rational as a Python int."""
    return int(value.numerator // value.denominator)

"""Metric entropy via the exact Rokhlin sum, and lap-growth topological entropy."""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from ..core.certify import certify_preservation
from ..core.pamap import PAFunction
from ..core.rational import ONE, ZERO, DenominatorOverflow, Q, check_denominator, \
    denominator_guard, format_rational

__all__ = [
    "UncertifiedMap",
    "LogCombination",
    "rokhlin_entropy",
    "LapCounter",
    "LapTable",
    "topological_entropy_lower",
]


class UncertifiedMap(ValueError):
    """An analysis that presumes Lebesgue preservation got a map that fails it."""


def require_certified(f: PAFunction) -> None:
    cert = certify_preservation(f)
    if not cert.passed:
        raise UncertifiedMap(f"map does not preserve Lebesgue measure: {cert.summary()}")


def _log(q) -> float:
    q = Q(q)
    return math.log(int(q.numerator)) - math.log(int(q.denominator))


@dataclass(frozen=True)
class LogCombination:
    """``sum(weight * log(arg))`` with rational weights and positive rational args.

    Terms are merged by argument and sorted; ``log 1`` and zero weights drop out.
    """

    terms: tuple = field(default=())

    def __post_init__(self):
        acc: dict = {}
        for w, arg in self.terms:
            w, arg = Q(w), Q(arg)
            if arg <= 0:
                raise ValueError("logarithm of a nonpositive number")
            if arg == ONE or w == 0:
                continue
            acc[arg] = acc.get(arg, ZERO) + w
        object.__setattr__(
            self, "terms", tuple(sorted(((w, a) for a, w in acc.items() if w != 0), key=lambda t: t[1]))
        )

    def __float__(self) -> float:
        return math.fsum(float(w) * _log(a) for w, a in self.terms)

    def sign(self) -> int:
        """Exact sign of the combination."""
        if not self.terms:
            return 0
        signs = {(1 if w > 0 else -1) * (1 if a > 1 else -1) for w, a in self.terms}
        if len(signs) == 1:
            return signs.pop()
        # compare prod(a ** (w * D)) with 1 using integer exponents
        den = 1
        for w, _ in self.terms:
            den = den * int(w.denominator) // math.gcd(den, int(w.denominator))
        num = ONE
        for w, a in self.terms:
            e = int(w * den)
            num *= a**e if e >= 0 else ONE / a ** (-e)
        return (num > 1) - (num < 1)

    def is_positive(self) -> bool:
        return self.sign() > 0

    def __eq__(self, other) -> bool:
        if isinstance(other, LogCombination):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{w}*log({a})" for w, a in self.terms)

    def to_json(self) -> dict:
        return {
            "terms": [{"weight": format_rational(w), "logOf": format_rational(a)} for w, a in self.terms],
            "float": float(self),
        }


def rokhlin_entropy(f: PAFunction) -> LogCombination:
    """Metric entropy ``sum |segment| * log |slope|`` of a Lebesgue-preserving PA map."""
    require_certified(f)
    return LogCombination(tuple((x1 - x0, abs(s)) for x0, x1, _, _, s in f.segments()))


class LapCounter:
    """Exact lap numbers of iterates without composing them.

    With ``I_1 .. I_L`` the laps of ``f``, the laps of ``f^n`` on an interval
    ``J`` satisfy ``laps(f^n, J) = sum_i laps(f^(n-1), f(J ∩ I_i))``: a turning
    point of ``f`` is always a turning point of ``f^n``, and on each piece
    ``f`` is a homeomorphism onto its image. Interior full laps are summed
    from per-level prefix tables, so only the two end pieces recurse.
    """

    def __init__(self, f: PAFunction, guard: int | None = None):
        if any(s == 0 for s in f.slopes):
            raise ValueError("lap counting of iterates needs nonzero slopes")
        self.f = f
        self.guard = denominator_guard() if guard is None else guard
        self.turning = list(f.turning_points())
        self.turning_values = [f.evaluate(t) for t in self.turning]
        self._memo: dict = {}
        self._prefix: list[list[int]] = []
        self._images: dict = {}

    def _image(self, x):
        y = self._images.get(x)
        if y is None:
            y = check_denominator(self.f.evaluate(x), self.guard)
            self._images[x] = y
        return y

    def _prefix_for(self, n: int) -> list[int]:
        while len(self._prefix) <= n:
            level = len(self._prefix)
            tv = self.turning_values
            acc = [0]
            for k in range(len(tv) - 1):
                a, b = tv[k], tv[k + 1]
                acc.append(acc[-1] + self.count(level, min(a, b), max(a, b)))
            self._prefix.append(acc)
        return self._prefix[n]

    def count(self, n: int, u, v) -> int:
        """Laps of ``f^n`` restricted to ``[u, v]``."""
        if n == 0 or u == v:
            return 1
        key = (n, u, v)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        t = self.turning
        i0 = bisect_right(t, u)
        i1 = bisect_left(t, v)
        fu, fv = self._image(u), self._image(v)
        if i0 >= i1:
            result = self.count(n - 1, min(fu, fv), max(fu, fv))
        else:
            a, b = self.turning_values[i0], self.turning_values[i1 - 1]
            result = self.count(n - 1, min(fu, a), max(fu, a))
            result += self.count(n - 1, min(b, fv), max(b, fv))
            prefix = self._prefix_for(n - 1)
            result += prefix[i1 - 1] - prefix[i0]
        self._memo[key] = result
        return result

    def laps(self, n: int) -> int:
        x0, x1 = self.f.domain
        return self.count(n, x0, x1)


@dataclass(frozen=True)
class LapTable:
    rows: tuple  # (n, laps, log(laps) / n)
    complete: bool
    message: str = ""

    @property
    def final_estimate(self) -> float:
        return self.rows[-1][2] if self.rows else 0.0

    def to_json(self) -> dict:
        return {
            "rows": [{"n": n, "laps": str(l), "estimate": e} for n, l, e in self.rows],
            "complete": self.complete,
            "message": self.message,
        }


def topological_entropy_lower(f: PAFunction, n_max: int, guard: int | None = None) -> LapTable:
    """Table of ``(n, lap(f^n), log(lap(f^n)) / n)`` for ``n = 1..n_max``.

    For piecewise-monotone maps the estimate converges to the topological
    entropy; lap numbers are submultiplicative, so it approaches it from
    above. Stops early with ``complete=False`` if the denominator guard trips.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    counter = LapCounter(f, guard)
    rows = []
    for n in range(1, n_max + 1):
        try:
            laps = counter.laps(n)
        except DenominatorOverflow as exc:
            return LapTable(tuple(rows), False, str(exc))
        rows.append((n, laps, math.log(laps) / n))
    return LapTable(tuple(rows), True)

"""Continuous piecewise-affine functions with exact rational breakpoints."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Iterator

from .intervals import IntervalSet
from .rational import ONE, ZERO, Q, check_denominator, denominator_guard

__all__ = [
    "PAFunction",
    "PAMap",
    "canonical_points",
    "compose",
    "compose_power",
    "sup_distance",
    "preimage",
    "image",
]


def canonical_points(xs, ys) -> tuple[list, list]:
    """Drop interior breakpoints where the two adjacent slopes agree."""
    out_x = [xs[0]]
    out_y = [ys[0]]
    for i in range(1, len(xs)):
        x, y = xs[i], ys[i]
        if len(out_x) >= 2:
            x0, y0 = out_x[-2], out_y[-2]
            x1, y1 = out_x[-1], out_y[-1]
            if (y1 - y0) * (x - x1) == (y - y1) * (x1 - x0):
                out_x[-1] = x
                out_y[-1] = y
                continue
        out_x.append(x)
        out_y.append(y)
    return out_x, out_y


class PAFunction:
    """A continuous function on ``[xs[0], xs[-1]]``, affine between breakpoints.

    The breakpoint list is kept in canonical form: x strictly increasing and no
    two consecutive segments share a slope. Instances are immutable.
    """

    def __init__(self, points: Iterable, *, canonical: bool = True):
        xs = []
        ys = []
        for x, y in points:
            xs.append(Q(x))
            ys.append(Q(y))
        if len(xs) < 2:
            raise ValueError("need at least two breakpoints")
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise ValueError(f"breakpoint x-coordinates not strictly increasing at {a}, {b}")
        if canonical:
            xs, ys = canonical_points(xs, ys)
        self._xs = tuple(xs)
        self._ys = tuple(ys)
        self._validate()

    def _validate(self) -> None:
        pass

    @classmethod
    def _from_trusted(cls, xs, ys):
        obj = cls.__new__(cls)
        obj._xs = tuple(xs)
        obj._ys = tuple(ys)
        obj._validate()
        return obj

    @property
    def xs(self) -> tuple:
        return self._xs

    @property
    def ys(self) -> tuple:
        return self._ys

    @property
    def points(self) -> list[tuple]:
        return list(zip(self.xs, self.ys))

    @property
    def domain(self) -> tuple:
        return self.xs[0], self.xs[-1]

    @property
    def slopes(self) -> tuple:
        cached = self.__dict__.get("_slopes")
        if cached is None:
            xs, ys = self.xs, self.ys
            cached = tuple((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1))
            self.__dict__["_slopes"] = cached
        return cached

    @property
    def n_segments(self) -> int:
        return len(self.xs) - 1

    def segments(self) -> Iterator[tuple]:
        """Yield ``(x0, x1, y0, y1, slope)`` for every affine piece."""
        xs, ys, sl = self.xs, self.ys, self.slopes
        for i in range(len(xs) - 1):
            yield xs[i], xs[i + 1], ys[i], ys[i + 1], sl[i]

    def max_abs_slope(self):
        return max(abs(s) for s in self.slopes)

    def segment_index(self, x) -> int:
        xs = self.xs
        i = bisect_right(xs, x) - 1
        return min(max(i, 0), len(xs) - 2)

    def evaluate(self, x):
        x = Q(x)
        x0, x1 = self.domain
        if x < x0 or x > x1:
            raise ValueError(f"{x} outside domain [{x0}, {x1}]")
        i = self.segment_index(x)
        return self.ys[i] + self.slopes[i] * (x - self.xs[i])

    __call__ = evaluate

    def restrict(self, a, b) -> "PAFunction":
        a, b = Q(a), Q(b)
        if not (self.xs[0] <= a < b <= self.xs[-1]):
            raise ValueError(f"[{a}, {b}] not a nondegenerate subinterval of the domain")
        xs = self.xs
        inner = [(x, y) for x, y in zip(xs, self.ys) if a < x < b]
        pts = [(a, self.evaluate(a))] + inner + [(b, self.evaluate(b))]
        return PAFunction(pts)

    def directions(self) -> list[int]:
        return [(s > 0) - (s < 0) for s in self.slopes]

    def turning_points(self) -> list:
        """Interior breakpoints where the direction of monotonicity flips.

        Constant pieces do not break monotonicity; a flat run between opposite
        directions contributes its left end.
        """
        out = []
        last_dir = 0
        last_turn_candidate = None
        xs = self.xs
        for i, d in enumerate(self.directions()):
            if d == 0:
                if last_turn_candidate is None:
                    last_turn_candidate = xs[i]
                continue
            if last_dir != 0 and d != last_dir:
                out.append(last_turn_candidate if last_turn_candidate is not None else xs[i])
            last_dir = d
            last_turn_candidate = None
        return out

    def laps(self) -> list[tuple]:
        ts = self.turning_points()
        bounds = [self.xs[0], *ts, self.xs[-1]]
        return list(zip(bounds, bounds[1:]))

    def lap_count(self) -> int:
        return len(self.turning_points()) + 1

    def is_monotone(self) -> bool:
        return self.lap_count() == 1

    def value_range(self) -> tuple:
        return min(self.ys), max(self.ys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PAFunction):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self) -> int:
        return hash((self.xs, self.ys))

    def __repr__(self) -> str:
        n = self.n_segments
        if n <= 6:
            body = ", ".join(f"({x}, {y})" for x, y in zip(self.xs, self.ys))
            return f"{type(self).__name__}({body})"
        return f"{type(self).__name__}(<{n} segments on [{self.xs[0]}, {self.xs[-1]}]>)"


class PAMap(PAFunction):
    """A piecewise-affine endomorphism of [0, 1]."""

    def _validate(self) -> None:
        if self.xs[0] != ZERO or self.xs[-1] != ONE:
            raise ValueError("PAMap breakpoints must start at x=0 and end at x=1")
        lo, hi = min(self.ys), max(self.ys)
        if lo < ZERO or hi > ONE:
            raise ValueError(f"PAMap values must lie in [0, 1], got range [{lo}, {hi}]")

    @classmethod
    def identity(cls) -> "PAMap":
        return cls([(0, 0), (1, 1)])

    @classmethod
    def reflection(cls) -> "PAMap":
        """The map ``x -> 1 - x``."""
        return cls([(0, 1), (1, 0)])

    @classmethod
    def tent(cls) -> "PAMap":
        return cls([(0, 0), (Q("1/2"), 1), (1, 0)])

    @classmethod
    def from_function(cls, f: PAFunction) -> "PAMap":
        return cls._from_trusted(f.xs, f.ys)


def compose(f: PAFunction, g: PAFunction, *, guard: int | None = None) -> PAFunction:
    """Exact ``f ∘ g``. The result has the type of ``g`` when both are PAMaps."""
    lo, hi = g.value_range()
    if lo < f.xs[0] or hi > f.xs[-1]:
        raise ValueError("range of the inner map escapes the domain of the outer map")
    fx = f.xs
    out_x = [g.xs[0]]
    for x0, x1, y0, y1, s in g.segments():
        if s != 0:
            a, b = (y0, y1) if y0 < y1 else (y1, y0)
            i = bisect_right(fx, a)
            j = bisect_left(fx, b)
            cuts = [x0 + (t - y0) / s for t in fx[i:j]]
            if s < 0:
                cuts.reverse()
            out_x.extend(cuts)
        out_x.append(x1)
    out_y = [f.evaluate(g.evaluate(x)) for x in out_x]
    if guard is not None:
        for v in out_x:
            check_denominator(v, guard)
        for v in out_y:
            check_denominator(v, guard)
    xs, ys = canonical_points(out_x, out_y)
    cls = PAMap if isinstance(f, PAMap) and isinstance(g, PAMap) else PAFunction
    return cls._from_trusted(xs, ys)


def compose_power(f: PAMap, n: int, *, guard: int | None = None) -> PAMap:
    """``f`` iterated ``n`` times by repeated exact composition.

    Raises :class:`DenominatorOverflow` once any breakpoint denominator
    exceeds ``guard`` (default: :func:`denominator_guard`).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    guard = denominator_guard() if guard is None else guard
    result = PAMap.identity()
    for _ in range(n):
        result = compose(f, result, guard=guard)
    return result


def sup_distance(f: PAFunction, g: PAFunction):
    """Exact ``max |f - g|`` over the common domain.

    Both functions are affine between the merged breakpoints, so the maximum
    is attained at one of them.
    """
    if f.domain != g.domain:
        raise ValueError("functions have different domains")
    merged = sorted(set(f.xs) | set(g.xs))
    return max(abs(f.evaluate(x) - g.evaluate(x)) for x in merged)


def preimage(f: PAFunction, A: IntervalSet) -> IntervalSet:
    comps = A.components
    uppers = [v for _, v in comps]
    out = []
    for x0, x1, y0, y1, s in f.segments():
        lo, hi = (y0, y1) if y0 <= y1 else (y1, y0)
        k = bisect_left(uppers, lo)
        while k < len(comps) and comps[k][0] <= hi:
            u, v = comps[k]
            k += 1
            a, b = max(u, lo), min(v, hi)
            if a > b:
                continue
            if s == 0:
                out.append((x0, x1))
                continue
            xa = x0 + (a - y0) / s
            xb = x0 + (b - y0) / s
            out.append((xa, xb) if xa <= xb else (xb, xa))
    return IntervalSet(out)


def image(f: PAFunction, A: IntervalSet) -> IntervalSet:
    xs = f.xs
    out = []
    for u, v in A.components:
        if v < xs[0] or u > xs[-1]:
            continue
        u, v = max(u, xs[0]), min(v, xs[-1])
        i = f.segment_index(u)
        while i < len(xs) - 1 and xs[i] <= v:
            a = max(u, xs[i])
            b = min(v, xs[i + 1])
            if a <= b:
                ya = f.ys[i] + f.slopes[i] * (a - xs[i])
                yb = f.ys[i] + f.slopes[i] * (b - xs[i])
                out.append((ya, yb) if ya <= yb else (yb, ya))
            i += 1
    return IntervalSet(out)

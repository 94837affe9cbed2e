"""Density points of interval unions and the density-point identity for measure-preserving maps."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.intervals import IntervalSet
from ..core.pamap import PAFunction, image, preimage
from ..core.rational import ONE, ZERO, Q, format_rational
from .entropy import require_certified

__all__ = ["DensitySet", "density_points", "truncated_density_set", "DensityIdentityResult",
           "density_identity_check", "lemma2_check"]


@dataclass(frozen=True)
class DensitySet:
    """A closed interval set with finitely many points removed."""

    closure: IntervalSet
    excluded: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(
            self, "excluded", frozenset(p for p in self.excluded if p in self.closure)
        )

    @property
    def measure(self):
        return self.closure.measure

    def __contains__(self, x) -> bool:
        x = Q(x)
        return x in self.closure and x not in self.excluded

    def __and__(self, other) -> "DensitySet":
        if isinstance(other, IntervalSet):
            other = DensitySet(other)
        return DensitySet(self.closure & other.closure, self.excluded | other.excluded)

    def preimage(self, f: PAFunction) -> "DensitySet":
        removed = set()
        if self.excluded:
            pts = IntervalSet((p, p) for p in self.excluded)
            for u, v in preimage(f, pts):
                if u != v:
                    raise ValueError("map is constant on a piece; preimage of a point is not finite")
                removed.add(u)
        return DensitySet(preimage(f, self.closure), frozenset(removed))

    def components(self) -> list[tuple]:
        """``(u, v, left_closed, right_closed)`` pieces; removed interior points split them."""
        out = []
        for u, v in self.closure:
            cuts = sorted(p for p in self.excluded if u < p < v)
            bounds = [u, *cuts, v]
            for k, (a, b) in enumerate(zip(bounds, bounds[1:])):
                left = a not in self.excluded
                right = b not in self.excluded
                out.append((a, b, left, right))
            if u == v and u not in self.excluded:
                out.append((u, v, True, True))
        return out

    def to_json(self) -> list:
        return [
            {"lo": format_rational(a), "hi": format_rational(b), "loClosed": l, "hiClosed": r}
            for a, b, l, r in self.components()
        ]


def density_points(A: IntervalSet) -> DensitySet:
    """Exact set ``D(A)`` of density points of a finite interval union.

    Interior points of components have density 1. An endpoint inside (0, 1)
    has one-sided density 1/2 (components are separated after merging), so it
    is excluded; 0 and 1 use the one-sided definition and are density points
    whenever a component reaches them. Point components have density 0.
    """
    closure = []
    excluded = set()
    for u, v in A:
        if u == v:
            continue
        closure.append((u, v))
        if u > ZERO:
            excluded.add(u)
        if v < ONE:
            excluded.add(v)
    return DensitySet(IntervalSet(closure), frozenset(excluded))


def _windowed_measure(A: IntervalSet, x, r):
    lo, hi = x - r, x + r
    total = ZERO
    for u, v in A:
        a, b = max(u, lo), min(v, hi)
        if a < b:
            total += b - a
    return total


def truncated_density_set(A: IntervalSet, m: int, n: int) -> DensitySet:
    """The open set ``{x : (m/2) * lambda(A ∩ [x - 1/m, x + 1/m]) > 1 - 1/n}``.

    ``D(A)`` is the intersection over ``n`` of the lim inf over ``m`` of these
    sets (at interior points). The window measure is piecewise linear in
    ``x``, so the superlevel set is computed exactly.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    r = ONE / m
    theta = (ONE - ONE / n) * 2 / m
    knots = {ZERO, ONE}
    for u, v in A:
        for p in (u - r, u + r, v - r, v + r):
            if ZERO < p < ONE:
                knots.add(p)
    knots = sorted(knots)
    phi = [_windowed_measure(A, k, r) for k in knots]

    pieces = []  # closed pieces of the closure of the superlevel set
    excluded = set()
    for (p, q), (fp, fq) in zip(zip(knots, knots[1:]), zip(phi, phi[1:])):
        above_p, above_q = fp > theta, fq > theta
        if above_p and above_q:
            pieces.append((p, q))
        elif above_p or above_q:
            cross = p + (theta - fp) * (q - p) / (fq - fp)
            if above_p:
                pieces.append((p, cross))
                excluded.add(cross)
            else:
                pieces.append((cross, q))
                excluded.add(cross)
        elif fp == theta and fq == theta:
            continue
    for k, val in zip(knots, phi):
        if not val > theta:
            excluded.add(k)
    return DensitySet(IntervalSet(pieces), frozenset(excluded))


@dataclass(frozen=True)
class DensityIdentityResult:
    A: IntervalSet
    B: DensitySet
    measure_A: object
    measure_B: object

    @property
    def holds(self) -> bool:
        return self.measure_A == self.measure_B

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "measureA": format_rational(self.measure_A),
            "measureB": format_rational(self.measure_B),
            "holds": self.holds,
        }


def density_identity_check(f: PAFunction, A: IntervalSet) -> DensityIdentityResult:
    """Exact ``B = {x in A : x in D(A), f(x) in D(f(A))}`` and the test ``λ(B) = λ(A)``."""
    require_certified(f)
    dA = density_points(A)
    dfA = density_points(image(f, A))
    B = dA & dfA.preimage(f) & A
    return DensityIdentityResult(A, B, A.measure, B.measure)


# name used by the command line flag
lemma2_check = density_identity_check

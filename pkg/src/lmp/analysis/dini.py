"""Finite-scale Dini envelopes from exact one-sided difference quotients."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.pamap import PAFunction
from ..core.rational import ONE, Q, format_rational

__all__ = ["DiniEnvelope", "dini_envelopes", "knot_fraction", "min_max_right_quotient", "blowup_statistic"]


@dataclass(frozen=True)
class DiniEnvelope:
    """Quotient extremes at one point.

    ``table[j] = (max_right, min_right, max_left, min_left)`` over the
    increments ``t = 2^-j * 2^-i`` (``i < increments``) that keep ``x ± t``
    in the domain; an entry is ``None`` when no increment fits.
    """

    x: object
    scales: tuple  # exponents j
    table: tuple

    def at(self, j: int) -> tuple:
        return self.table[self.scales.index(j)]

    def to_rows(self) -> list[list]:
        rows = []
        for j, entry in zip(self.scales, self.table):
            rows.append([format_rational(self.x), j, *(None if q is None else float(q) for q in entry)])
        return rows


def _extremes(values):
    return (max(values), min(values)) if values else (None, None)


def dini_envelopes(f: PAFunction, grid_points: int, scales, increments: int = 40) -> list[DiniEnvelope]:
    """Envelopes at ``x_i = i / (grid_points + 1)``, ``i = 1..grid_points``.

    The window at scale ``2^-j`` holds the geometric ladder
    ``2^-j, 2^-j-1, ..., 2^-j-increments+1``; maxima can only grow (and
    minima shrink) as increments are added. Quotients are exact rationals.
    """
    if grid_points < 1 or increments < 1:
        raise ValueError("grid_points and increments must be positive")
    scales = tuple(sorted(set(int(j) for j in scales)))
    if any(j < 0 for j in scales):
        raise ValueError("scale exponents must be nonnegative")
    lo, hi = f.domain
    out = []
    for i in range(1, grid_points + 1):
        x = lo + (hi - lo) * Q(i) / (grid_points + 1)
        fx = f.evaluate(x)
        rows = []
        for j in scales:
            right, left = [], []
            t = ONE / (1 << j)
            for _ in range(increments):
                if x + t <= hi:
                    right.append((f.evaluate(x + t) - fx) / t)
                if x - t >= lo:
                    left.append((fx - f.evaluate(x - t)) / t)
                t /= 2
            rows.append((*_extremes(right), *_extremes(left)))
        out.append(DiniEnvelope(x, scales, tuple(rows)))
    return out


def min_max_right_quotient(envelopes, j: int):
    """Smallest signed ``max_right`` over the grid at scale ``2^-j``."""
    vals = [e.at(j)[0] for e in envelopes if e.at(j)[0] is not None]
    return min(vals) if vals else None


def blowup_statistic(envelopes, j: int):
    """Smallest ``max |right quotient|`` over the grid at scale ``2^-j``.

    The unsigned form is used because the signed maximum is negative just
    right of any local maximum, whatever the level.
    """
    vals = []
    for e in envelopes:
        mr, nr, _, _ = e.at(j)
        if mr is not None:
            vals.append(max(abs(mr), abs(nr)))
    return min(vals) if vals else None


def knot_fraction(envelopes, threshold) -> float:
    """Share of grid points whose finest-scale envelopes exceed ``±threshold`` on both sides."""
    threshold = Q(threshold)
    if not envelopes:
        return 0.0
    hits = 0
    for e in envelopes:
        mr, nr, ml, nl = e.table[-1]
        if None in (mr, nr, ml, nl):
            continue
        if mr > threshold and ml > threshold and nr < -threshold and nl < -threshold:
            hits += 1
    return hits / len(envelopes)

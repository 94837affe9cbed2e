"""Finite-level symmetric seed maps preserving Lebesgue measure.

Level 0 is the tent map. Every affine cell of level ``k`` (a monotone piece
over a value window ``W`` of width ``2**-k``) is replaced at level ``k + 1``
by a staircase: ``W`` is halved, and each half is traversed by an ``m``-fold
zigzag of full branches (``m`` odd), in the direction of the parent cell.
Per half-window the ``m`` branches have reciprocal slopes summing to the
parent's, so every level is exactly Lebesgue preserving. Consequences:

* ``f(0) = f(1) = 0``, ``f(1/2) = 1`` and ``f(1 - x) = f(x)`` at every level;
* all cells share the slope ``2 * m**k`` (for constant ``m``), so slopes
  blow up geometrically;
* consecutive levels differ by at most the window width:
  ``||seed(k+1) - seed(k)|| <= 2**-k``.

Cells have equal length, so a level is stored as integer value numerators on
a uniform grid and exact rational breakpoints are built only on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from gmpy2 import mpq

from ..core.pamap import PAFunction, PAMap
from ..core.rational import HALF, ONE, ZERO, Q, floor_int

__all__ = ["SeedSchedule", "SeedMap", "seed", "seed_halves"]


@dataclass(frozen=True)
class SeedSchedule:
    """Zigzag multiplicity per refinement step and the deepest allowed level.

    ``multiplicity`` is either one odd integer used at every step or a tuple
    giving the multiplicity for steps ``0 -> 1``, ``1 -> 2``, ...
    """

    multiplicity: int | tuple = 3
    max_level: int = 8

    def __post_init__(self):
        mult = self.multiplicity
        if isinstance(mult, list):
            mult = tuple(mult)
            object.__setattr__(self, "multiplicity", mult)
        values = mult if isinstance(mult, tuple) else (mult,)
        for m in values:
            if not isinstance(m, int) or m < 3 or m % 2 == 0:
                raise ValueError(f"zigzag multiplicity must be an odd integer >= 3, got {m!r}")
        if isinstance(mult, tuple) and len(mult) < self.max_level:
            raise ValueError("per-level multiplicity tuple shorter than max_level")
        if self.max_level < 0:
            raise ValueError("max_level must be nonnegative")

    def at(self, step: int) -> int:
        mult = self.multiplicity
        return mult[step] if isinstance(mult, tuple) else mult

    def to_json(self) -> dict:
        mult = self.multiplicity
        return {"multiplicity": list(mult) if isinstance(mult, tuple) else mult,
                "maxLevel": self.max_level}

    @classmethod
    def from_json(cls, data: dict) -> "SeedSchedule":
        mult = data.get("multiplicity", 3)
        return cls(tuple(mult) if isinstance(mult, list) else mult, int(data.get("maxLevel", 8)))


DEFAULT_SCHEDULE = SeedSchedule()


def _refine(lo, hi, direction, m):
    lo = lo * 2
    hi = hi * 2
    mid = (lo + hi) // 2
    up = direction > 0
    first_lo = np.where(up, lo, mid)
    first_hi = np.where(up, mid, hi)
    second_lo = np.where(up, mid, lo)
    second_hi = np.where(up, hi, mid)
    n = lo.shape[0]
    new_lo = np.concatenate(
        [np.repeat(first_lo[:, None], m, axis=1), np.repeat(second_lo[:, None], m, axis=1)], axis=1
    ).reshape(2 * m * n)
    new_hi = np.concatenate(
        [np.repeat(first_hi[:, None], m, axis=1), np.repeat(second_hi[:, None], m, axis=1)], axis=1
    ).reshape(2 * m * n)
    zig = np.array([1 if i % 2 == 0 else -1 for i in range(m)] * 2, dtype=np.int8)
    new_dir = (direction[:, None] * zig[None, :]).reshape(2 * m * n)
    return new_lo, new_hi, new_dir


class SeedMap(PAMap):
    """Seed level stored on its uniform cell grid.

    ``ynum[i] / yden`` is the value at ``x = i / ncells``; ``direction[i]``
    is the sign of the slope on cell ``i``.
    """

    def __init__(self, level: int, schedule: SeedSchedule = DEFAULT_SCHEDULE):
        lo = np.array([0, 0], dtype=np.int64)
        hi = np.array([1, 1], dtype=np.int64)
        direction = np.array([1, -1], dtype=np.int8)
        for step in range(level):
            lo, hi, direction = _refine(lo, hi, direction, schedule.at(step))
        start = np.where(direction > 0, lo, hi)
        self.level = level
        self.schedule = schedule
        self.ncells = int(direction.shape[0])
        self.yden = 1 << level
        self.ynum = np.append(start, 0)
        self.direction = direction

    @cached_property
    def _canonical(self):
        d = self.direction
        idx = np.concatenate(([0], np.nonzero(d[1:] != d[:-1])[0] + 1, [self.ncells]))
        n, den = self.ncells, self.yden
        xs = tuple(mpq(int(i), n) for i in idx)
        ys = tuple(mpq(int(self.ynum[i]), den) for i in idx)
        return xs, ys

    @property
    def xs(self) -> tuple:
        return self._canonical[0]

    @property
    def ys(self) -> tuple:
        return self._canonical[1]

    def cell_slope(self):
        return mpq(self.ncells, self.yden)

    def max_abs_slope(self):
        return self.cell_slope()

    def evaluate(self, x):
        x = Q(x)
        if x < 0 or x > 1:
            raise ValueError(f"{x} outside domain [0, 1]")
        t = x * self.ncells
        i = min(floor_int(t), self.ncells - 1)
        y0 = int(self.ynum[i])
        y1 = int(self.ynum[i + 1])
        return (y0 + (y1 - y0) * (t - i)) / self.yden

    __call__ = evaluate

    def lap_count(self) -> int:
        return len(self.xs) - 1

    @property
    def domain(self) -> tuple:
        return (ZERO, ONE)

    def __repr__(self) -> str:
        return f"SeedMap(level={self.level}, cells={self.ncells})"


@lru_cache(maxsize=16)
def seed(level: int, schedule: SeedSchedule = DEFAULT_SCHEDULE) -> SeedMap:
    """Seed map at ``level``; level 0 is the tent map."""
    if level < 0 or level > schedule.max_level:
        raise ValueError(f"seed level {level} outside schedule range 0..{schedule.max_level}")
    return SeedMap(level, schedule)


def seed_halves(f: PAMap) -> tuple[PAFunction, PAFunction]:
    """Split a symmetric seed into its rising left and falling right halves."""
    if f.evaluate(HALF) != ONE:
        raise ValueError("seed halves need f(1/2) = 1")
    return f.restrict(0, HALF), f.restrict(HALF, 1)

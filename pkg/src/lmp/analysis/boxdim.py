"""Exact dyadic box counts for graphs of PA functions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core.pamap import PAFunction
from ..core.rational import Q, floor_int

__all__ = ["BoxCountTable", "box_count", "box_dimension"]


def _row(y, n: int) -> int:
    return min(floor_int(y * n), n - 1)


def box_count(f: PAFunction, j: int) -> int:
    """Boxes of the ``2^-j`` grid on ``[0,1]^2`` meeting the graph of ``f``.

    Columns are closed; rows are half-open except the top one. In each column
    the graph is connected, so it meets every row between the rows of its
    minimum and maximum, and those extremes sit at breakpoints or column ends.
    """
    n = 1 << j
    lo, hi = f.domain
    xs, ys = f.xs, f.ys
    total = 0
    seg = 0
    for k in range(n):
        a, b = Q(k) / n, Q(k + 1) / n
        if b < lo or a > hi:
            continue
        a, b = max(a, lo), min(b, hi)
        vals = [f.evaluate(a), f.evaluate(b)]
        while seg < len(xs) and xs[seg] < a:
            seg += 1
        m = seg
        while m < len(xs) and xs[m] <= b:
            vals.append(ys[m])
            m += 1
        total += _row(max(vals), n) - _row(min(vals), n) + 1
    return total


@dataclass(frozen=True)
class BoxCountTable:
    rows: tuple  # (j, boxes)
    slope: float

    def to_json(self) -> dict:
        return {
            "rows": [{"scale": f"1/{1 << j}", "exponent": j, "boxes": c} for j, c in self.rows],
            "slope": self.slope,
        }


def box_dimension(f: PAFunction, exponents) -> BoxCountTable:
    """Counts at scales ``2^-j`` and the least-squares slope of ``log N`` on ``log 2^j``."""
    exponents = sorted(set(int(j) for j in exponents))
    if len(exponents) < 2 or exponents[0] < 0:
        raise ValueError("need at least two nonnegative scale exponents")
    rows = tuple((j, box_count(f, j)) for j in exponents)
    x = np.array([j * math.log(2) for j, _ in rows])
    y = np.array([math.log(c) for _, c in rows])
    slope = float(np.polyfit(x, y, 1)[0])
    return BoxCountTable(rows, slope)

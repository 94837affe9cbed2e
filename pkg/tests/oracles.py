"""Independent reference computations in plain ``fractions.Fraction`` arithmetic."""

import bisect
import itertools
import math
from fractions import Fraction


def fr(x):
    return Fraction(int(x.numerator), int(x.denominator))


def pts(f):
    return [(Fraction(int(x.numerator), int(x.denominator)), Fraction(int(y.numerator), int(y.denominator)))
            for x, y in zip(f.xs, f.ys)]


def evaluate(points, x):
    x = Fraction(x)
    if not points[0][0] <= x <= points[-1][0]:
        raise ValueError("outside domain")
    k = max(1, bisect.bisect_left([p[0] for p in points], x))
    (x0, y0), (x1, y1) = points[k - 1], points[k]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def pushforward_measure(points, c, d):
    """Lebesgue measure of the preimage of ``[c, d]``, segment by segment."""
    total = Fraction(0)
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        lo, hi = min(y0, y1), max(y0, y1)
        if lo == hi:
            if c <= lo <= d:
                total += x1 - x0
            continue
        a, b = max(lo, c), min(hi, d)
        if a < b:
            total += (b - a) * (x1 - x0) / (hi - lo)
    return total


def is_measure_preserving(points):
    values = sorted({y for _, y in points} | {Fraction(0), Fraction(1)})
    return all(pushforward_measure(points, c, d) == d - c for c, d in zip(values, values[1:]))


def compose_points(f_points, g_points, n=2000):
    """f∘g sampled on a fine grid (only used for value comparisons)."""
    return [(Fraction(k, n), evaluate(f_points, evaluate(g_points, Fraction(k, n)))) for k in range(n + 1)]


def lap_count_by_grid(points):
    ys = [y for _, y in points]
    dirs = [(b > a) - (b < a) for a, b in zip(ys, ys[1:])]
    dirs = [d for d in dirs if d]
    return 1 + sum(1 for a, b in zip(dirs, dirs[1:]) if a != b)


def iterate_points(points, n):
    """Breakpoints of the n-th iterate via repeated exact composition."""
    cur = points
    for _ in range(n - 1):
        xs = {x for x, _ in cur}
        fx = [x for x, _ in points]
        for (x0, y0), (x1, y1) in zip(cur, cur[1:]):
            for b in fx:
                if y0 != y1 and min(y0, y1) < b < max(y0, y1):
                    xs.add(x0 + (b - y0) * (x1 - x0) / (y1 - y0))
        cur = [(x, evaluate(points, evaluate(cur, x))) for x in sorted(xs)]
    return cur


def box_count(points, j):
    """Count boxes of the 2^-j grid meeting the graph by checking each box."""
    n = 2**j
    count = 0
    for col in range(n):
        a, b = Fraction(col, n), Fraction(col + 1, n)
        lo = hi = None
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            u, v = max(a, x0), min(b, x1)
            if u > v:
                continue
            for x in (u, v):
                y = y0 + (y1 - y0) * (x - x0) / (x1 - x0)
                lo = y if lo is None else min(lo, y)
                hi = y if hi is None else max(hi, y)
        for row in range(n):
            r0, r1 = Fraction(row, n), Fraction(row + 1, n)
            top_closed = row == n - 1
            if hi >= r0 and (lo < r1 or (top_closed and lo <= r1)):
                count += 1
    return count


def crooked_pair_fails(points, a, b, delta):
    """Direct scan of the definition at ``a < b`` over breakpoints and level crossings."""
    a, b, delta = fr(a), fr(b), fr(delta)
    ga, gb = evaluate(points, a), evaluate(points, b)
    cand = {a, b} | {x for x, _ in points if a < x < b}
    for level in (ga - delta, ga + delta, gb - delta, gb + delta):
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if y0 != y1 and min(y0, y1) <= level <= max(y0, y1):
                x = x0 + (level - y0) * (x1 - x0) / (y1 - y0)
                if a <= x <= b:
                    cand.add(x)
    cand = sorted(cand)
    near_b = [x for x in cand if abs(evaluate(points, x) - gb) <= delta]
    near_a = [x for x in cand if abs(evaluate(points, x) - ga) <= delta]
    return not (near_b and near_a and min(near_b) < max(near_a))


def grid_crookedness_failure(points, delta, n):
    grid = sorted({Fraction(k, n) for k in range(n + 1)} | {x for x, _ in points})
    for a, b in itertools.combinations(grid, 2):
        if crooked_pair_fails(points, a, b, delta):
            return a, b
    return None


def rokhlin_float(points):
    return math.fsum(
        float(x1 - x0) * math.log(abs((y1 - y0) / (x1 - x0))) for (x0, y0), (x1, y1) in zip(points, points[1:])
    )


def window_ratio(components, x, r):
    lo, hi = max(Fraction(0), x - r), min(Fraction(1), x + r)
    inside = sum(max(Fraction(0), min(v, hi) - max(u, lo)) for u, v in components)
    return inside / (hi - lo)

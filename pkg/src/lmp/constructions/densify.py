"""Rescaled seed halves and the epsilon-densification of a map preserving Lebesgue measure."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core.certify import certify_preservation
from ..core.pamap import PAFunction, PAMap
from ..core.rational import HALF, ONE, ZERO, Q
from .seed import DEFAULT_SCHEDULE, SeedSchedule, seed, seed_halves

__all__ = [
    "rescale_g",
    "rescale_h",
    "PartitionPeps",
    "epsilon_partition",
    "monotone_pieces",
    "densify",
]


def _check_box(a, b, c, d):
    a, b, c, d = Q(a), Q(b), Q(c), Q(d)
    if not a < b:
        raise ValueError(f"degenerate domain [{a}, {b}]")
    if c == d:
        raise ValueError(f"degenerate range: c = d = {c}")
    return a, b, c, d


def rescale_g(a, b, c, d, g: PAFunction) -> PAFunction:
    """``x -> c + (d - c) * g((x - a) / (2 (b - a)))`` on ``[a, b]``.

    ``g`` is the left half of a seed, defined on ``[0, 1/2]``.
    """
    a, b, c, d = _check_box(a, b, c, d)
    if g.domain != (ZERO, HALF):
        raise ValueError("g must be defined on [0, 1/2]")
    sx, sy = 2 * (b - a), d - c
    return PAFunction._from_trusted(
        [a + sx * u for u in g.xs], [c + sy * v for v in g.ys]
    )


def rescale_h(a, b, c, d, h: PAFunction) -> PAFunction:
    """``x -> c + (d - c) * h(1/2 + (x - a) / (2 (b - a)))`` on ``[a, b]``.

    With ``h(1/2) = 1`` and ``h(1) = 0`` this starts at ``d`` and ends at ``c``.
    """
    a, b, c, d = _check_box(a, b, c, d)
    if h.domain != (HALF, ONE):
        raise ValueError("h must be defined on [1/2, 1]")
    sx, sy = 2 * (b - a), d - c
    return PAFunction._from_trusted(
        [a + sx * (u - HALF) for u in h.xs], [c + sy * v for v in h.ys]
    )


@dataclass(frozen=True)
class PartitionPeps:
    points: tuple
    mesh: object
    eps: object


def epsilon_partition(ell: PAMap, eps) -> PartitionPeps:
    """Uniform grid of mesh ``<= eps/4`` refined by the critical values of ``ell``.

    Critical values are the values at local extrema, endpoints included.
    """
    eps = Q(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = -((-4 * eps.denominator) // eps.numerator)  # ceil(4 / eps)
    pts = {Q(j) / n for j in range(n + 1)}
    for x in (ZERO, *ell.turning_points(), ONE):
        pts.add(ell.evaluate(x))
    points = tuple(sorted(pts))
    mesh = max(b - a for a, b in zip(points, points[1:]))
    assert mesh < eps / 2
    return PartitionPeps(points, mesh, eps)


def _lap_inverse(ell: PAMap, lo_idx: int, hi_idx: int, value):
    """x in the monotone run of segments ``lo_idx..hi_idx`` with ``ell(x) = value``."""
    xs, ys, sl = ell.xs, ell.ys, ell.slopes
    increasing = ys[hi_idx + 1] > ys[lo_idx]
    lo, hi = lo_idx, hi_idx
    while lo < hi:
        mid = (lo + hi) // 2
        end = ys[mid + 1]
        if (end < value) if increasing else (end > value):
            lo = mid + 1
        else:
            hi = mid
    return xs[lo] + (value - ys[lo]) / sl[lo]


def monotone_pieces(ell: PAMap, points) -> list[tuple]:
    """Left-to-right pieces ``(a, b, increasing)`` of ``ell`` over partition cells.

    Each piece is a maximal interval on which ``ell`` is monotone and maps
    onto one cell ``[p_{i-1}, p_i]``. Requires every critical value in
    ``points``.
    """
    from bisect import bisect_left

    xs = ell.xs
    dirs = ell.directions()
    pieces = []
    start = 0
    while start < len(dirs):
        end = start
        while end + 1 < len(dirs) and dirs[end + 1] == dirs[start]:
            end += 1
        if dirs[start] == 0:
            raise ValueError("constant piece: map cannot be densified")
        y_start, y_end = ell.ys[start], ell.ys[end + 1]
        lo, hi = min(y_start, y_end), max(y_start, y_end)
        i0, i1 = bisect_left(points, lo), bisect_left(points, hi)
        if points[i0] != lo or points[i1] != hi:
            raise ValueError("partition misses a critical value")
        levels = list(points[i0 : i1 + 1])
        increasing = dirs[start] > 0
        if not increasing:
            levels.reverse()
        cuts = [xs[start]]
        for v in levels[1:-1]:
            cuts.append(_lap_inverse(ell, start, end, v))
        cuts.append(xs[end + 1])
        pieces.extend((a, b, increasing) for a, b in zip(cuts, cuts[1:]))
        start = end + 1
    return pieces


@lru_cache(maxsize=16)
def _halves(level: int, schedule: SeedSchedule):
    return seed_halves(seed(level, schedule))


def densify(ell: PAMap, eps, seed_level: int, schedule: SeedSchedule = DEFAULT_SCHEDULE) -> PAMap:
    """Replace every monotone piece of ``ell`` over a cell of P_eps by a rescaled seed half.

    The result preserves Lebesgue measure and lies within ``mesh(P_eps) < eps/2`` of ``ell``.
    """
    if not certify_preservation(ell).passed:
        raise ValueError("densify needs a Lebesgue-preserving map")
    part = epsilon_partition(ell, eps)
    g, h = _halves(seed_level, schedule)
    out_x = [ZERO]
    out_y = [ell.ys[0]]
    for a, b, increasing in monotone_pieces(ell, part.points):
        ya, yb = ell.evaluate(a), ell.evaluate(b)
        assert ya != yb
        c, d = (ya, yb) if increasing else (yb, ya)
        piece = rescale_g(a, b, c, d, g) if increasing else rescale_h(a, b, c, d, h)
        out_x.extend(piece.xs[1:])
        out_y.extend(piece.ys[1:])
    return PAMap(zip(out_x, out_y))

"""Exact delta-crookedness of PA functions and of the iterates of a map.

A function ``g`` is delta-crooked when for all ``a < b`` there are
``a <= c < d <= b`` with ``|g(c) - g(b)| <= delta`` and
``|g(d) - g(a)| <= delta``.

Decision procedure. Suppose the pair ``(a, b)`` fails with
``g(b) - g(a) > delta`` (pairs closer than delta never fail; the other sign
is the same problem for ``1 - g``). Put ``L1 = g(a) + delta`` and
``L2 = g(b) - delta``. Then ``s``, the last point of ``[a, b]`` with
``g <= L1``, is at or before ``t``, the first point with ``g >= L2``; so
``L1 <= L2``, no level-``L1`` or level-``L2`` point lies strictly between
``s`` and ``t``, and shrinking ``a`` to the last point before ``s`` at
level ``L1 - delta`` (``b`` to the first point after ``t`` at level
``L2 + delta``) keeps the failure. For fixed ``(L1, L2)`` this reduces the
search to consecutive level hits. The answer only changes when ``L1`` crosses
a value in ``V ∪ (V + delta)`` or ``L2`` one in ``V ∪ (V - delta)``, with
``V`` the breakpoint values, so one representative level pair per cell
suffices. Every reported failure is re-checked directly.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from ..core.pamap import PAFunction, compose
from ..core.rational import ONE, Q, format_rational

__all__ = ["pair_condition", "find_crookedness_failure", "is_delta_crooked", "CrookedRow", "crookedness_check"]


def _first_last_near(g: PAFunction, a, b, level, delta):
    """First and last ``x`` in ``[a, b]`` with ``|g(x) - level| <= delta``."""
    lo, hi = level - delta, level + delta
    first = last = None
    i = g.segment_index(a)
    xs, ys, sl = g.xs, g.ys, g.slopes
    while i < len(xs) - 1 and xs[i] <= b:
        x0, x1 = max(a, xs[i]), min(b, xs[i + 1])
        if x0 <= x1:
            s = sl[i]
            y0 = ys[i] + s * (x0 - xs[i])
            if s == 0:
                ok = lo <= y0 <= hi
                span = (x0, x1) if ok else None
            else:
                ya, yb = (lo, hi) if s > 0 else (hi, lo)
                p = x0 + (ya - y0) / s
                q = x0 + (yb - y0) / s
                p, q = max(p, x0), min(q, x1)
                span = (p, q) if p <= q else None
            if span is not None:
                if first is None:
                    first = span[0]
                last = span[1]
        i += 1
    return first, last


def pair_condition(g: PAFunction, a, b, delta) -> bool:
    """Whether some ``a <= c < d <= b`` has ``|g(c)-g(b)| <= delta`` and ``|g(d)-g(a)| <= delta``."""
    a, b, delta = Q(a), Q(b), Q(delta)
    if not a < b:
        raise ValueError("need a < b")
    c_min, _ = _first_last_near(g, a, b, g.evaluate(b), delta)
    _, d_max = _first_last_near(g, a, b, g.evaluate(a), delta)
    return c_min < d_max


def _hits(g: PAFunction, level) -> list:
    """Sorted points where ``g`` takes ``level``; flat pieces contribute both ends."""
    out = set()
    xs, ys = g.xs, g.ys
    for i in range(len(xs) - 1):
        y0, y1 = ys[i], ys[i + 1]
        if y0 == level:
            out.add(xs[i])
        if y1 == level:
            out.add(xs[i + 1])
        if (y0 < level < y1) or (y1 < level < y0):
            out.add(xs[i] + (level - y0) * (xs[i + 1] - xs[i]) / (y1 - y0))
    return sorted(out)


def _representatives(points) -> list:
    """Each point and each open gap, as ``(lo, hi)`` with ``lo == hi`` for points."""
    pts = sorted(set(points))
    reps = [(p, p) for p in pts]
    reps.extend(zip(pts, pts[1:]))
    return reps


def _level_pairs(cells1, cells2):
    """One ``(L1, L2)`` with ``L1 < L2`` per pair of cells that admits one."""
    for i0, i1 in cells1:
        for j0, j1 in cells2:
            if i0 == i1 and j0 == j1:
                if i0 < j0:
                    yield i0, j0
            elif i0 == i1:
                lo = max(j0, i0)
                if lo < j1:
                    yield i0, (lo + j1) / 2
            elif j0 == j1:
                hi = min(i1, j0)
                if i0 < hi:
                    yield (i0 + hi) / 2, j0
            else:
                lo, hi = max(i0, j0), min(i1, j1)
                if lo < hi:
                    w = hi - lo
                    yield lo + w / 3, lo + 2 * w / 3
                elif i1 <= j0:
                    yield (i0 + i1) / 2, (j0 + j1) / 2


def _up_failure(g: PAFunction, delta):
    V = sorted(set(g.ys))
    vmin, vmax = V[0], V[-1]
    C1 = [v for v in set(V) | {v + delta for v in V} if vmin + delta <= v <= vmax]
    C2 = [v for v in set(V) | {v - delta for v in V} if vmin <= v <= vmax - delta]
    if not C1 or not C2:
        return None
    cache: dict = {}

    def hits(level):
        h = cache.get(level)
        if h is None:
            h = cache[level] = _hits(g, level)
        return h

    def try_crossing(s, t, H1, H2, L1, L2):
        A = hits(L1 - delta)
        k = bisect_right(A, s)
        if k == 0:
            return None
        a = A[k - 1]
        k2 = bisect_left(H2, t)
        if k2 and H2[k2 - 1] >= a:
            return None
        B = hits(L2 + delta)
        k = bisect_left(B, t)
        if k == len(B):
            return None
        b = B[k]
        k1 = bisect_right(H1, s)
        if k1 < len(H1) and H1[k1] <= b:
            return None
        if a < b and not pair_condition(g, a, b, delta):
            return a, b
        return None

    reps1 = _representatives(C1)
    reps2 = _representatives(C2)
    for L1, L2 in _level_pairs(reps1, reps2):
        H1, H2 = hits(L1), hits(L2)
        merged = sorted([(x, 1) for x in H1] + [(x, 2) for x in H2])
        for (s, k1), (t, k2) in zip(merged, merged[1:]):
            if k1 == 1 and k2 == 2:
                w = try_crossing(s, t, H1, H2, L1, L2)
                if w:
                    return w
    diagonal = _representatives(C1 + C2)
    for lo, hi in diagonal:
        L = lo if lo == hi else (lo + hi) / 2
        if not (vmin + delta <= L <= vmax - delta):
            continue
        H = hits(L)
        for x in H:
            w = try_crossing(x, x, H, H, L, L)
            if w:
                return w
    return None


def find_crookedness_failure(g: PAFunction, delta):
    """A pair ``(a, b)`` violating delta-crookedness, or ``None`` if ``g`` is delta-crooked."""
    delta = Q(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    w = _up_failure(g, delta)
    if w is None:
        flipped = PAFunction._from_trusted(g.xs, [ONE - y for y in g.ys])
        w = _up_failure(flipped, delta)
    return w


def is_delta_crooked(g: PAFunction, delta) -> bool:
    return find_crookedness_failure(g, delta) is None


@dataclass(frozen=True)
class CrookedRow:
    n: int
    crooked: bool
    witness: tuple | None

    def to_json(self) -> dict:
        w = None if self.witness is None else [format_rational(v) for v in self.witness]
        return {"n": self.n, "crooked": self.crooked, "witness": w}


def crookedness_check(f: PAFunction, delta, n_max: int) -> list[CrookedRow]:
    """Decide delta-crookedness of ``f, f^2, ..., f^n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    g = f
    for n in range(1, n_max + 1):
        if n > 1:
            g = compose(f, g)
        w = find_crookedness_failure(g, delta)
        rows.append(CrookedRow(n, w is None, w))
    return rows

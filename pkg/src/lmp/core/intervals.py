"""Finite unions of closed rational subintervals of [0, 1]."""

from __future__ import annotations

from typing import Iterable, Iterator

from .rational import ONE, ZERO, Q, format_rational

__all__ = ["IntervalSet"]


class IntervalSet:
    """Sorted, pairwise disjoint closed intervals ``[u, v]`` inside [0, 1].

    Overlapping or touching inputs are merged on construction, so
    ``[0, 1/2] | [1/2, 1]`` normalizes to ``[0, 1]``. Degenerate components
    ``[u, u]`` are kept (they carry measure zero).
    """

    __slots__ = ("_components",)

    def __init__(self, components: Iterable = ()):
        items = []
        for comp in components:
            u, v = Q(comp[0]), Q(comp[1])
            if u > v:
                raise ValueError(f"empty interval [{u}, {v}]")
            if u < ZERO or v > ONE:
                raise ValueError(f"interval [{u}, {v}] not inside [0, 1]")
            items.append((u, v))
        items.sort()
        merged: list[tuple] = []
        for u, v in items:
            if merged and u <= merged[-1][1]:
                if v > merged[-1][1]:
                    merged[-1] = (merged[-1][0], v)
            else:
                merged.append((u, v))
        self._components = tuple(merged)

    @classmethod
    def _trusted(cls, merged) -> "IntervalSet":
        obj = cls.__new__(cls)
        obj._components = tuple(merged)
        return obj

    @classmethod
    def full(cls) -> "IntervalSet":
        return cls._trusted([(ZERO, ONE)])

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls._trusted([])

    @property
    def components(self) -> tuple:
        return self._components

    @property
    def measure(self):
        return sum((v - u for u, v in self._components), ZERO)

    @property
    def degenerate(self) -> tuple:
        """Point components, flagged separately from proper intervals."""
        return tuple(u for u, v in self._components if u == v)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._components)

    def __len__(self) -> int:
        return len(self._components)

    def __bool__(self) -> bool:
        return bool(self._components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        body = ", ".join(f"[{u}, {v}]" for u, v in self._components)
        return f"IntervalSet({body})"

    def __contains__(self, x) -> bool:
        x = Q(x)
        lo, hi = 0, len(self._components)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._components[mid][1] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self._components) and self._components[lo][0] <= x

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._components + other._components)

    __or__ = union

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        a, b = self._components, other._components
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            u = max(a[i][0], b[j][0])
            v = min(a[i][1], b[j][1])
            if u <= v:
                out.append((u, v))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        # Touching results (e.g. [0,1/2] & ([0,1/4] | [1/4,1])) still need merging.
        return IntervalSet(out)

    __and__ = intersection

    def closure_complement(self) -> "IntervalSet":
        """Closure of ``[0, 1]`` minus this set."""
        out = []
        prev = ZERO
        for u, v in self._components:
            if u > prev:
                out.append((prev, u))
            prev = v
        if prev < ONE:
            out.append((prev, ONE))
        return IntervalSet._trusted(out)

    def to_json(self) -> list:
        return [[format_rational(u), format_rational(v)] for u, v in self._components]

    @classmethod
    def from_json(cls, data) -> "IntervalSet":
        return cls((Q(u), Q(v)) for u, v in data)

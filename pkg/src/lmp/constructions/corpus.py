"""Random generators for Lebesgue-preserving maps and a fixed evaluation corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core.pamap import PAMap, compose
from ..core.rational import ONE, ZERO, Q
from .conjugate import PLHomeomorphism
from .densify import densify
from .seed import seed

__all__ = ["random_walk_map", "random_homeomorphism", "CorpusEntry", "corpus"]


def _random_partition(rng: random.Random, cells: int, resolution: int) -> list:
    cuts = sorted(rng.sample(range(1, resolution), cells - 1))
    return [ZERO] + [Q(c) / resolution for c in cuts] + [ONE]


def random_walk_map(
    rng: random.Random,
    cells: int = 4,
    steps: int = 8,
    weight_max: int = 5,
    resolution: int | None = None,
) -> PAMap:
    """Random PAMap preserving Lebesgue measure built from a walk on a value grid.

    The walk moves between adjacent grid values, each step being one affine
    branch over one value cell, until every cell has been crossed and at
    least ``steps`` steps were taken. The widths of cell ``j`` are then shared
    out among its crossings with random integer weights, which makes the
    reciprocal slopes over cell ``j`` sum to one.
    """
    if cells < 1:
        raise ValueError("cells must be >= 1")
    resolution = resolution or 4 * cells
    grid = _random_partition(rng, cells, resolution) if cells > 1 else [ZERO, ONE]
    vertex = rng.randrange(cells + 1)
    path = [vertex]
    crossed = set()
    while len(crossed) < cells or len(path) - 1 < steps:
        if vertex == 0:
            step = 1
        elif vertex == cells:
            step = -1
        else:
            step = rng.choice((-1, 1))
        crossed.add(min(vertex, vertex + step))
        vertex += step
        path.append(vertex)
    visits: dict[int, list[int]] = {}
    for k, (u, v) in enumerate(zip(path, path[1:])):
        visits.setdefault(min(u, v), []).append(k)
    lengths = [ZERO] * (len(path) - 1)
    for cell, ks in visits.items():
        weights = [rng.randint(1, weight_max) for _ in ks]
        total = sum(weights)
        width = grid[cell + 1] - grid[cell]
        for k, w in zip(ks, weights):
            lengths[k] = width * w / total
    x = ZERO
    pts = [(x, grid[path[0]])]
    for k, vtx in enumerate(path[1:]):
        x += lengths[k]
        pts.append((x, grid[vtx]))
    return PAMap(pts)


def random_homeomorphism(rng: random.Random, pieces: int = 3, resolution: int = 12) -> PLHomeomorphism:
    xs = _random_partition(rng, pieces, resolution)
    ys = _random_partition(rng, pieces, resolution)
    return PLHomeomorphism(zip(xs, ys))


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    map: PAMap


def corpus(size: int = 250, seed_value: int = 0) -> list[CorpusEntry]:
    """Deterministic mix of named, random-walk, composed and densified maps preserving Lebesgue measure."""
    rng = random.Random(seed_value)
    out = [
        CorpusEntry("identity", PAMap.identity()),
        CorpusEntry("reflection", PAMap.reflection()),
        CorpusEntry("tent", PAMap.tent()),
        CorpusEntry("one-minus-tent", compose(PAMap.reflection(), PAMap.tent())),
    ]
    for level in (1, 2, 3):
        out.append(CorpusEntry(f"seed-{level}", PAMap.from_function(seed(level))))
    k = 0
    while len(out) < size:
        kind = k % 4
        k += 1
        if kind in (0, 1):
            f = random_walk_map(rng, cells=rng.randint(1, 6), steps=rng.randint(2, 12))
            out.append(CorpusEntry(f"walk-{k}", f))
        elif kind == 2:
            ell = random_walk_map(rng, cells=rng.randint(2, 4), steps=rng.randint(2, 6))
            eps = ONE / rng.choice((2, 4, 8))
            level = rng.choice((0, 0, 1))
            out.append(CorpusEntry(f"densify-{k}", densify(ell, eps, level)))
        else:
            f1 = random_walk_map(rng, cells=rng.randint(1, 3), steps=rng.randint(2, 5))
            f2 = random_walk_map(rng, cells=rng.randint(1, 3), steps=rng.randint(2, 5))
            out.append(CorpusEntry(f"compose-{k}", compose(f1, f2)))
    return out[:size]

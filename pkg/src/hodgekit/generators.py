"""Deterministic complex generators for fixtures and experiments.

Every generator returns a list of top simplices suitable for
build_complex; seeded generators are byte-reproducible for a given seed.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import BadParams

TopSimplices = list[list[int]]


def cycle(n: int) -> TopSimplices:
    """Cycle graph on n vertices (n=3 gives the hollow triangle)."""
    if n < 3:
        raise BadParams(f"a cycle needs at least 3 vertices, got {n}")
    return [sorted((i, (i + 1) % n)) for i in range(n)]


def path(n: int) -> TopSimplices:
    """Path graph on n vertices."""
    if n < 1:
        raise BadParams(f"a path needs at least 1 vertex, got {n}")
    if n == 1:
        return [[0]]
    return [[i, i + 1] for i in range(n - 1)]


def sphere2() -> TopSimplices:
    """Octahedron boundary: the minimal-ish triangulated 2-sphere."""
    equator = [1, 2, 3, 4]
    tris = []
    for pole in (0, 5):
        for i in range(4):
            tris.append(sorted((pole, equator[i], equator[(i + 1) % 4])))
    return tris


def torus() -> TopSimplices:
    """Minimal 7-vertex triangulated torus (14 triangles, 21 edges)."""
    tris = []
    for i in range(7):
        tris.append(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7)))
        tris.append(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7)))
    return tris


def random_graph(n: int, p: float, seed: int) -> TopSimplices:
    """Erdos-Renyi style G(n, p); isolated vertices are kept as 0-simplices."""
    if n < 1:
        raise BadParams(f"a graph needs at least 1 vertex, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    tops: TopSimplices = [[v] for v in range(n)]
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            tops.append([i, j])
    return tops


def crosslinked_cycle(n: int, k: int, seed: int) -> TopSimplices:
    """Cycle on n vertices plus k random chords (no duplicates)."""
    if n < 3:
        raise BadParams(f"a cycle needs at least 3 vertices, got {n}")
    if k < 0:
        raise BadParams(f"chord count must be non-negative, got {k}")
    chords = [
        (i, j)
        for i, j in combinations(range(n), 2)
        if (j - i) % n not in (1, n - 1)
    ]
    if k > len(chords):
        raise BadParams(f"only {len(chords)} chords available, asked for {k}")
    rng = np.random.default_rng(seed)
    picked = rng.choice(len(chords), size=k, replace=False)
    tops = cycle(n)
    for idx in sorted(int(i) for i in picked):
        tops.append(list(chords[idx]))
    return tops

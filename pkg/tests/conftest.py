"""Shared fixture complexes and sheaf builders for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from hodgekit import Simplex, SimplicialComplex, build_complex
from hodgekit import generators as gen
from hodgekit.sheaf import Sheaf


def tetra_boundary_tops() -> list[list[int]]:
    return [list(f.vertices) for f in Simplex((0, 1, 2, 3)).faces()]


# Name -> top simplices for every complex the property suites sweep over.
CORPUS_TOPS: dict[str, list[list[int]]] = {
    "vertex": [[0]],
    "six-isolated": [[v] for v in range(6)],
    "path4": gen.path(4),
    "tree5": [[0, 1], [1, 2], [1, 3], [3, 4]],
    "star4": [[0, 1], [0, 2], [0, 3]],
    "hollow-triangle": gen.cycle(3),
    "filled-triangle": [[0, 1, 2]],
    "two-shared-edge": [[0, 1, 2], [1, 2, 3]],
    "two-disjoint-triangles": [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]],
    "cycle8": gen.cycle(8),
    "crosslinked-12-3": gen.crosslinked_cycle(12, 3, seed=7),
    "tetra": [[0, 1, 2, 3]],
    "tetra-boundary": tetra_boundary_tops(),
    "sphere2": gen.sphere2(),
    "torus7": gen.torus(),
    "sparse-labels": [[2, 10], [10, 40], [2, 40], [55]],
}

CORPUS: dict[str, SimplicialComplex] = {
    name: build_complex(tops) for name, tops in CORPUS_TOPS.items()
}


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_complex(request) -> SimplicialComplex:
    return CORPUS[request.param]


def random_complex(rng: np.random.Generator, n_vertices: int = 7) -> SimplicialComplex:
    """Random complex of dimension at most 3 covering all vertices."""
    tops: list[list[int]] = [[v] for v in range(n_vertices)]
    for _ in range(int(rng.integers(3, 8))):
        size = int(rng.integers(2, 5))
        verts = rng.choice(n_vertices, size=size, replace=False)
        tops.append(sorted(int(v) for v in verts))
    return build_complex(tops)


LEFT_SHIFT = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
DROP_LAST = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])


def shift_register_sheaf() -> tuple[SimplicialComplex, Sheaf]:
    """Line complex 0-1-2 with length-3 windows on vertices, overlaps on edges."""
    line = build_complex([[0, 1], [1, 2]])
    stalks = {(0,): 3, (1,): 3, (2,): 3, (0, 1): 2, (1, 2): 2}
    maps = {
        ((0,), (0, 1)): LEFT_SHIFT,
        ((1,), (0, 1)): DROP_LAST,
        ((1,), (1, 2)): LEFT_SHIFT,
        ((2,), (1, 2)): DROP_LAST,
    }
    return line, Sheaf(line, stalks, maps)


def gauge_sheaf(c: SimplicialComplex, seed: int = 0) -> Sheaf:
    """Rank-1 sheaf with restriction scalars g(coface)/g(face).

    Compositions telescope, so it commutes by construction; it is
    conjugate to the constant sheaf and shares its cohomology.
    """
    rng = np.random.default_rng(seed)
    g = {}
    stalks = {}
    for n in range(c.max_dim + 1):
        for s in c.simplices(n):
            g[s] = float(rng.uniform(0.5, 2.0))
            stalks[s] = 1
    maps = {}
    for n in range(1, c.max_dim + 1):
        for coface in c.simplices(n):
            for face in coface.faces():
                maps[(face, coface)] = np.array([[g[coface] / g[face]]])
    return Sheaf(c, stalks, maps)

"""Construction, closure, canonical ordering, and face navigation."""

import itertools

import numpy as np
import pytest

from hodgekit import Simplex, build_complex
from hodgekit.errors import (
    DuplicateVertex,
    EmptySimplex,
    InvalidVertex,
    UnknownSimplex,
    ZeroDimensional,
)

from conftest import CORPUS, CORPUS_TOPS


def test_filled_triangle_has_seven_simplices():
    c = build_complex([[0, 1, 2]])
    assert c.n_simplices(0) == 3
    assert c.n_simplices(1) == 3
    assert c.n_simplices(2) == 1
    assert len(c) == 7


def test_single_vertex():
    c = build_complex([[0]])
    assert c.max_dim == 0
    assert len(c) == 1


def test_hollow_triangle_is_its_own_closure():
    c = build_complex([[0, 1], [1, 2], [2, 0]])
    assert c.n_simplices(0) == 3
    assert c.n_simplices(1) == 3
    assert c.max_dim == 1


def test_build_rejects_empty_and_duplicates():
    with pytest.raises(EmptySimplex):
        build_complex([[]])
    with pytest.raises(DuplicateVertex):
        build_complex([[0, 1, 0]])
    with pytest.raises(InvalidVertex):
        build_complex([[-1, 2]])


def test_build_is_idempotent_under_duplicate_inputs():
    once = build_complex([[0, 1, 2]])
    twice = build_complex([[0, 1, 2], [0, 1, 2], [1, 2]])
    for n in range(3):
        assert once.simplices(n) == twice.simplices(n)


def test_closure_property(corpus_complex):
    c = corpus_complex
    for n in range(1, c.max_dim + 1):
        for s in c.simplices(n):
            for f in s.faces():
                assert f in c


def test_canonical_order_stable_under_permuted_input():
    rng = np.random.default_rng(3)
    for name, tops in CORPUS_TOPS.items():
        shuffled = [list(t) for t in tops]
        rng.shuffle(shuffled)
        shuffled = [list(reversed(t)) if len(t) > 1 else t for t in shuffled]
        rebuilt = build_complex(shuffled)
        for n in range(CORPUS[name].max_dim + 1):
            assert rebuilt.simplices(n) == CORPUS[name].simplices(n), name


def test_faces_order_and_count():
    s = Simplex((0, 1, 2))
    faces = s.faces()
    assert faces == (Simplex((1, 2)), Simplex((0, 2)), Simplex((0, 1)))
    edge = Simplex((0, 1))
    assert edge.faces() == (Simplex((1,)), Simplex((0,)))
    assert len(Simplex((0, 1, 2, 3)).faces()) == 4
    with pytest.raises(ZeroDimensional):
        Simplex((0,)).faces()


def test_faces_count_matches_dimension(corpus_complex):
    c = corpus_complex
    for n in range(1, c.max_dim + 1):
        for s in c.simplices(n):
            assert len(s.faces()) == s.dimension + 1


def test_cofaces_examples():
    hollow = build_complex([[0, 1], [1, 2], [2, 0]])
    assert hollow.cofaces(Simplex((0, 1))) == ()
    filled = build_complex([[0, 1, 2]])
    assert filled.cofaces(Simplex((0, 1))) == (Simplex((0, 1, 2)),)
    shared = build_complex([[0, 1, 2], [1, 2, 3]])
    assert len(shared.cofaces(Simplex((1, 2)))) == 2
    with pytest.raises(UnknownSimplex):
        hollow.cofaces(Simplex((5,)))


def test_cofaces_against_brute_force(corpus_complex):
    c = corpus_complex
    for n in range(c.max_dim):
        for s in c.simplices(n):
            brute = tuple(
                t
                for t in c.simplices(n + 1)
                if set(s.vertices).issubset(t.vertices)
            )
            assert c.cofaces(s) == brute
            for t in c.cofaces(s):
                assert s in t.faces()


def test_adjacency_matrix_four_vertex_graph():
    c = build_complex([[0, 1], [1, 2], [0, 2], [1, 3]])
    expected = np.array(
        [
            [0, 1, 1, 0],
            [1, 0, 1, 1],
            [1, 1, 0, 0],
            [0, 1, 0, 0],
        ],
        dtype=float,
    )
    assert np.array_equal(c.adjacency_matrix().toarray(), expected)


def test_adjacency_matrix_edge_cases():
    no_edges = build_complex([[0], [1], [2]])
    assert np.array_equal(no_edges.adjacency_matrix().toarray(), np.zeros((3, 3)))
    tri = build_complex([[0, 1], [1, 2], [0, 2]])
    expected = np.ones((3, 3)) - np.eye(3)
    assert np.array_equal(tri.adjacency_matrix().toarray(), expected)


def test_degree_matrix_examples():
    tri = build_complex([[0, 1], [1, 2], [0, 2]])
    assert np.array_equal(tri.degree_matrix().toarray(), 2 * np.eye(3))
    lone = build_complex([[0]])
    assert np.array_equal(lone.degree_matrix().toarray(), np.zeros((1, 1)))
    star = build_complex([[0, 1], [0, 2], [0, 3]])
    assert np.array_equal(star.degree_matrix().toarray(), np.diag([3.0, 1, 1, 1]))


def test_sparse_vertex_labels_are_preserved():
    c = CORPUS["sparse-labels"]
    assert c.vertices == (2, 10, 40, 55)
    assert Simplex((2, 40)) in c


def test_adjacency_symmetric_zero_diagonal(corpus_complex):
    a = corpus_complex.adjacency_matrix().toarray()
    assert np.array_equal(a, a.T)
    assert np.all(np.diag(a) == 0)
    assert set(np.unique(a)) <= {0.0, 1.0}


def test_simplex_validation_is_canonicalizing():
    assert Simplex((2, 0, 1)).vertices == (0, 1, 2)
    assert Simplex((5,)).dimension == 0
    dims = [
        s.dimension
        for s in itertools.chain.from_iterable(
            CORPUS["torus7"].simplices(n) for n in range(3)
        )
    ]
    assert dims == sorted(dims)

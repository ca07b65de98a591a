import random

import pytest

from phinmod.errors import GraphError
from phinmod.exact_linalg import det, is_positive_definite, rank
from phinmod.graph_core import (
    DualGraph,
    betti_one,
    cycle_basis,
    edge_pairing,
    monodromy_gram,
)


def graph(vertices, edges):
    return DualGraph.build(vertices, edges)


SINGLE = graph([("v0", 0)], [])
LOOP = graph([("v0", 0)], [("e0", "v0", "v0")])
SEGMENT = graph([("v0", 0), ("v1", 0)], [("e0", "v0", "v1")])
BANANA = graph([("v0", 0), ("v1", 0)], [("e0", "v0", "v1"), ("e1", "v0", "v1")])
THETA = graph(
    [("v0", 0), ("v1", 0)],
    [("e0", "v0", "v1"), ("e1", "v0", "v1"), ("e2", "v0", "v1")],
)


class TestValidation:
    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            graph([("v0", 0), ("v1", 0)], [])

    def test_missing_endpoint_rejected(self):
        with pytest.raises(GraphError):
            graph([("v0", 0)], [("e0", "v0", "v9")])

    def test_duplicate_ids_rejected(self):
        with pytest.raises(GraphError):
            graph([("v0", 0), ("v0", 1)], [])

    def test_empty_rejected(self):
        with pytest.raises(GraphError):
            graph([], [])


class TestBettiOne:
    def test_point(self):
        assert betti_one(SINGLE) == 0

    def test_loop(self):
        assert betti_one(LOOP) == 1

    def test_theta(self):
        assert betti_one(THETA) == 2


class TestCycleBasis:
    def test_tree_has_empty_basis(self):
        assert cycle_basis(SEGMENT).cycles == ()

    def test_single_loop(self):
        assert cycle_basis(LOOP).cycles == ((1,),)

    def test_theta_fundamental_cycles(self):
        # tree {e0}; cycles e1 - e0 and e2 - e0
        assert cycle_basis(THETA).cycles == ((-1, 1, 0), (-1, 0, 1))

    def test_boundary_is_zero(self):
        g = graph(
            [("v0", 0), ("v1", 0), ("v2", 0)],
            [
                ("e0", "v0", "v1"),
                ("e1", "v1", "v2"),
                ("e2", "v2", "v0"),
                ("e3", "v0", "v2"),
                ("e4", "v1", "v1"),
            ],
        )
        basis = cycle_basis(g)
        for cyc in basis.cycles:
            flux = {v.id: 0 for v in g.vertices}
            for coeff, e in zip(cyc, g.edges):
                flux[e.tail] -= coeff
                flux[e.head] += coeff
            assert all(x == 0 for x in flux.values())

    def test_count_matches_betti(self):
        for g in (SINGLE, LOOP, SEGMENT, BANANA, THETA):
            assert len(cycle_basis(g).cycles) == betti_one(g)


class TestEdgePairing:
    def test_same_edge(self):
        assert edge_pairing([1, 0], [1, 0]) == 1

    def test_reversed_edge(self):
        # tau acts by coordinate negation on the stored representative
        assert edge_pairing([1, 0], [-1, 0]) == -1

    def test_distinct_edges(self):
        assert edge_pairing([1, 0], [0, 1]) == 0

    def test_mismatch(self):
        with pytest.raises(ValueError):
            edge_pairing([1], [1, 0])


class TestMonodromyGram:
    def test_loop(self):
        assert monodromy_gram(LOOP).to_rows() == [[1]]

    def test_banana(self):
        assert monodromy_gram(BANANA).to_rows() == [[2]]

    def test_theta(self):
        assert monodromy_gram(THETA).to_rows() == [[2, 1], [1, 2]]

    def test_tree_is_empty(self):
        m = monodromy_gram(SEGMENT)
        assert (m.rows, m.cols) == (0, 0)

    def test_symmetric_positive_definite(self):
        for g in (LOOP, BANANA, THETA):
            m = monodromy_gram(g)
            assert m.is_symmetric()
            assert is_positive_definite(m)
            assert rank(m) == betti_one(g)

    def test_orientation_flip_preserves_det(self):
        rng = random.Random(7)
        for _ in range(20):
            nv = rng.randint(1, 5)
            vertices = [(f"v{i}", 0) for i in range(nv)]
            edges = [(f"e{j:02d}", f"v{rng.randrange(i)}", f"v{i}") for i, j in
                     zip(range(1, nv), range(nv - 1))]
            for j in range(nv - 1, nv - 1 + rng.randint(1, 4)):
                edges.append(
                    (f"e{j:02d}", f"v{rng.randrange(nv)}", f"v{rng.randrange(nv)}")
                )
            g = graph(vertices, edges)
            d = det(monodromy_gram(g))
            k = rng.randrange(len(edges))
            eid, tail, head = edges[k]
            flipped = list(edges)
            flipped[k] = (eid, head, tail)
            assert det(monodromy_gram(graph(vertices, flipped))) == d

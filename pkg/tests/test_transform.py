import numpy as np
import pytest
from hypothesis import given, settings

from mycielski.errors import (
    MatrixMismatchError,
    TooSmallError,
    VertexOutOfRangeError,
)
from mycielski.generators import complete, cycle, path, petersen, star
from mycielski.graph import Graph, all_pairs_distances, diameter
from mycielski.transform import (
    mu_degree,
    mu_distance,
    mu_distance_matrix,
    mycielskian,
)

from conftest import connected_graphs


class TestConstruction:
    def test_too_small(self):
        with pytest.raises(TooSmallError):
            mycielskian(Graph(1))
        with pytest.raises(TooSmallError):
            mycielskian(Graph(3))  # edgeless

    def test_k2_gives_a_five_cycle(self):
        mu = mycielskian(complete(2)).mu
        assert (mu.n, mu.m) == (5, 5)
        assert set(mu.degrees) == {2}
        assert diameter(mu) == 2

    def test_vertex_and_edge_counts(self):
        assert (mycielskian(cycle(4)).mu.n, mycielskian(cycle(4)).mu.m) == (9, 16)
        grotzsch = mycielskian(cycle(5)).mu
        assert (grotzsch.n, grotzsch.m) == (11, 20)

    def test_edge_set_is_exactly_the_definition(self):
        g = star(3)
        layout = mycielskian(g)
        n = g.n
        expected = set(g.edges)
        expected |= {tuple(sorted((u, n + v))) for u, v in g.edges}
        expected |= {tuple(sorted((v, n + u))) for u, v in g.edges}
        expected |= {(n + j, 2 * n) for j in range(n)}
        assert set(layout.mu.edges) == expected

    @given(connected_graphs())
    @settings(max_examples=50)
    def test_layout_invariants(self, g):
        layout = mycielskian(g)
        mu, n = layout.mu, g.n
        assert mu.n == 2 * n + 1
        assert mu.m == 3 * g.m + n
        # shadows form an independent set
        assert all(
            not mu.has_edge(n + i, n + j) for i in range(n) for j in range(i + 1, n)
        )
        assert mu.neighbors(layout.root) == frozenset(range(n, 2 * n))
        assert layout.base == g


class TestDegrees:
    def test_root_degree_is_n(self):
        layout = mycielskian(cycle(4))
        assert mu_degree(layout, layout.root) == 4

    def test_shadow_degree(self):
        layout = mycielskian(cycle(4))
        assert all(mu_degree(layout, layout.shadow(i)) == 3 for i in range(4))

    def test_original_degree_doubles(self):
        layout = mycielskian(star(4))
        assert mu_degree(layout, 0) == 8

    def test_out_of_range(self):
        layout = mycielskian(complete(2))
        with pytest.raises(VertexOutOfRangeError):
            mu_degree(layout, 5)

    @given(connected_graphs())
    @settings(max_examples=50)
    def test_formula_matches_adjacency_count(self, g):
        layout = mycielskian(g)
        assert [mu_degree(layout, v) for v in range(layout.mu.n)] == list(
            layout.mu.degrees
        )
        assert sum(layout.mu.degrees) == 6 * g.m + 2 * g.n


class TestDistances:
    def test_case_table_on_p5(self):
        g = path(5)
        layout = mycielskian(g)
        dg = all_pairs_distances(g)
        d = lambda u, v: mu_distance(layout, dg, u, v)
        root, shadow = layout.root, layout.shadow
        assert d(root, root) == 0
        assert d(root, shadow(2)) == 1
        assert d(root, 2) == 2
        assert d(shadow(0), shadow(4)) == 2
        assert d(0, 1) == 1  # originals at base distance <= 3
        assert d(0, 3) == 3
        assert d(0, 4) == 4  # base distance 4 capped
        assert d(2, shadow(2)) == 2  # original to its own shadow
        assert d(0, shadow(1)) == 1  # original to near shadow keeps base distance
        assert d(0, shadow(2)) == 2
        assert d(0, shadow(3)) == 3  # base distance >= 3 becomes 3

    def test_long_path_cap(self):
        g = path(6)
        dg = all_pairs_distances(g)
        assert mu_distance(mycielskian(g), dg, 0, 5) == 4

    def test_matrix_mismatch(self):
        with pytest.raises(MatrixMismatchError):
            mu_distance(mycielskian(path(3)), all_pairs_distances(path(4)), 0, 1)
        with pytest.raises(MatrixMismatchError):
            mu_distance_matrix(mycielskian(path(3)), all_pairs_distances(path(4)))

    def test_out_of_range(self):
        g = path(3)
        with pytest.raises(VertexOutOfRangeError):
            mu_distance(mycielskian(g), all_pairs_distances(g), 0, 7)

    def test_k2_matrix_equals_bfs(self):
        g = complete(2)
        layout = mycielskian(g)
        closed = mu_distance_matrix(layout, all_pairs_distances(g))
        assert np.array_equal(closed.d, all_pairs_distances(layout.mu).d)
        assert closed.max() == 2

    def test_petersen_matrix_equals_bfs(self):
        g = petersen()
        layout = mycielskian(g)
        closed = mu_distance_matrix(layout, all_pairs_distances(g))
        assert np.array_equal(closed.d, all_pairs_distances(layout.mu).d)

    @given(connected_graphs())
    @settings(max_examples=50)
    def test_matrix_equals_bfs_and_scalar(self, g):
        layout = mycielskian(g)
        dg = all_pairs_distances(g)
        closed = mu_distance_matrix(layout, dg)
        assert np.array_equal(closed.d, all_pairs_distances(layout.mu).d)
        size = layout.mu.n
        scalar = [[mu_distance(layout, dg, u, v) for v in range(size)] for u in range(size)]
        assert np.array_equal(closed.d, np.array(scalar))
        assert closed.max() <= 4

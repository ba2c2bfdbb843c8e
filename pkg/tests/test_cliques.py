from itertools import combinations

import networkx as nx
import pytest

from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.models.graph import Graph
from cliquetensor.services.clique_service import (
    clique_components,
    clique_connected,
    count_join_turan_cliques,
    elementary_symmetric,
    enumerate_cliques,
    is_clique_regular,
)
from cliquetensor.services.graph_service import (
    complete_graph,
    complete_multipartite,
    disjoint_union,
    join_turan,
    turan_graph,
)
from cliquetensor.services.scan_service import enumerate_graphs


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def two_triangles_with_bridge() -> Graph:
    return disjoint_union(complete_graph(3), complete_graph(3)).add_edge(2, 3)


def brute_force_cliques(graph: Graph, t: int) -> list:
    return [
        c for c in combinations(range(graph.n), t)
        if all(graph.has_edge(u, v) for u, v in combinations(c, 2))
    ]


class TestEnumeration:
    def test_complete_graph(self):
        """Test K_4 has C(4,3) = 4 triangles"""
        assert enumerate_cliques(complete_graph(4), 3).count == 4

    def test_triangle_free(self):
        """Test C_5 has no triangles"""
        assert enumerate_cliques(cycle(5), 3).count == 0

    def test_octahedron(self):
        """Test K(2,2,2) has 8 triangles"""
        cliques = enumerate_cliques(complete_multipartite([2, 2, 2]), 3)
        assert cliques.count == 8
        assert cliques.tuples == brute_force_cliques(complete_multipartite([2, 2, 2]), 3)

    def test_lexicographic_order(self):
        """Test cliques come out sorted by their vertex tuples"""
        graph = Graph.from_edges(7, nx.gnp_random_graph(7, 0.7, seed=11).edges())
        for t in range(1, 5):
            tuples = enumerate_cliques(graph, t).tuples
            assert tuples == sorted(tuples)
            assert tuples == brute_force_cliques(graph, t)

    def test_order_larger_than_graph(self):
        """Test t > n gives no cliques"""
        assert enumerate_cliques(complete_graph(3), 4).count == 0

    def test_invalid_order(self):
        """Test t < 1 is an argument error"""
        with pytest.raises(ArgumentError):
            enumerate_cliques(complete_graph(3), 0)

    @pytest.mark.parametrize("seed", range(10))
    def test_vertex_counts_sum(self, seed):
        """Test Σ_v (cliques through v) = t · c_t"""
        graph = Graph.from_edges(8, nx.gnp_random_graph(8, 0.6, seed=seed).edges())
        for t in range(2, 9):
            cliques = enumerate_cliques(graph, t)
            assert sum(cliques.vertex_counts()) == t * cliques.count

    def test_monotone_under_edge_addition(self):
        """Test adding an edge never removes a clique"""
        graph = cycle(6)
        before = set(enumerate_cliques(graph, 3).cliques)
        after = set(enumerate_cliques(graph.add_edge(0, 2), 3).cliques)
        assert before <= after
        assert len(after) == 1

    def test_restrict_relabels(self):
        """Test restricting to a vertex subset keeps only inside cliques"""
        cliques = enumerate_cliques(two_triangles_with_bridge(), 3)
        local = cliques.restrict([3, 4, 5])
        assert local.n == 3
        assert local.tuples == [(0, 1, 2)]


class TestJoinTuranCount:
    def test_elementary_symmetric(self):
        """Test e_2(1, 2, 3) = 11"""
        assert elementary_symmetric([1, 2, 3], 2) == 11
        assert elementary_symmetric([1, 2, 3], 0) == 1
        assert elementary_symmetric([1, 2, 3], 4) == 0

    def test_known_value(self):
        """Test triangles of K_1 ∨ K_{3,3}: apex times 9 edges"""
        assert count_join_turan_cliques(7, 2, 2, 3) == 9
        assert count_join_turan_cliques(7, 2, 2, 3) == enumerate_cliques(join_turan(7, 2, 2), 3).count

    def test_small_grid(self):
        """Test the closed form agrees with enumeration on a small grid"""
        for k in range(1, 4):
            for r in range(1, 5):
                for n in range(k - 1, 11):
                    graph = join_turan(n, k, r)
                    for t in range(1, min(r + 3, n) + 1):
                        assert count_join_turan_cliques(n, k, r, t) == enumerate_cliques(graph, t).count

    @pytest.mark.slow
    def test_full_grid(self):
        """Test agreement for k ≤ 4, r ≤ 5, t ≤ min(r+3, n), n ≤ 14"""
        for k in range(1, 5):
            for r in range(1, 6):
                for n in range(k - 1, 15):
                    graph = join_turan(n, k, r)
                    for t in range(1, min(r + 3, n) + 1):
                        assert count_join_turan_cliques(n, k, r, t) == enumerate_cliques(graph, t).count


class TestConnectivity:
    def test_bridge_splits_triangles(self):
        """Test 2K_3 plus a bridge has two triangle components but one edge component"""
        graph = two_triangles_with_bridge()
        split = clique_components(graph, 3)
        assert split.components == [0b000111, 0b111000]
        assert split.uncovered == 0
        assert not clique_connected(graph, 3)
        assert clique_connected(graph, 2)

    def test_uncovered_vertices(self):
        """Test vertices in no t-clique are reported and break connectivity"""
        graph = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        split = clique_components(graph, 3)
        assert split.uncovered == 0b1000
        assert not clique_connected(graph, 3)

    def test_no_clique(self):
        """Test a graph without t-cliques is not t-clique connected"""
        assert not clique_connected(cycle(5), 3)
        assert clique_components(cycle(5), 3).components == []

    def test_order_two_is_ordinary_connectivity(self):
        """Test 2-clique connectivity is connectivity without isolated vertices, all graphs n ≤ 5"""
        for n in range(1, 6):
            for graph in enumerate_graphs(n):
                nxg = graph.to_networkx()
                expected = graph.num_edges() > 0 and nx.is_connected(nxg) and min(graph.degrees()) > 0
                assert clique_connected(graph, 2) == expected

    def test_invalid_order(self):
        """Test connectivity needs t ≥ 2"""
        with pytest.raises(ArgumentError):
            clique_connected(complete_graph(3), 1)


class TestRegularity:
    def test_turan_graph_is_regular(self):
        """Test T_3(6) is triangle-regular"""
        assert is_clique_regular(turan_graph(6, 3), 3)

    def test_apex_breaks_regularity(self):
        """Test the apex of K_1 ∨ K_{3,3} lies in more triangles"""
        graph = join_turan(7, 2, 2)
        cliques = enumerate_cliques(graph, 3)
        assert cliques.vertex_counts()[0] == 9
        assert not is_clique_regular(graph, 3, cliques)

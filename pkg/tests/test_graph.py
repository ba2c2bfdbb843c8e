import random

import networkx as nx
import pytest

from cliquetensor.core.exceptions import ArgumentError, CapacityError, Graph6ParseError
from cliquetensor.models.graph import Graph, PartitionSpec
from cliquetensor.services.graph_service import (
    chvatal_hanson_bound,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    join,
    join_turan,
    matching_number,
    max_edges_bounded,
    partition_graph,
    turan_graph,
    turan_part_sizes,
)
from cliquetensor.services.isomorphism_service import are_isomorphic, find_isomorphism
from cliquetensor.services.scan_service import enumerate_graphs
from cliquetensor.utils.graph6 import graph_from_graph6, graph_to_graph6


def random_graph(n: int, p: float, seed: int) -> Graph:
    return Graph.from_edges(n, nx.gnp_random_graph(n, p, seed=seed).edges())


def edge_set(graph: Graph) -> set:
    return set(graph.edges())


def largest_disjoint_edges(edges) -> int:
    if not edges:
        return 0
    (u, v), rest = edges[0], edges[1:]
    skip = largest_disjoint_edges(rest)
    take = 1 + largest_disjoint_edges([e for e in rest if u not in e and v not in e])
    return max(skip, take)


def reference_decode(text: str) -> set:
    """Plain graph6 reading for n <= 62."""
    n = ord(text[0]) - 63
    bits = []
    for char in text[1:]:
        value = ord(char) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return {pair for pair, bit in zip(pairs, bits) if bit}


class TestGraphModel:
    def test_from_edges_merges_duplicates(self):
        """Test duplicate edges are stored once"""
        graph = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        assert graph.num_edges() == 2
        assert graph.edges() == [(0, 1), (1, 2)]
        assert graph.degrees() == [1, 2, 1]

    def test_rejects_asymmetric_rows(self):
        """Test adjacency rows must be symmetric"""
        with pytest.raises(ArgumentError):
            Graph(2, [0b10, 0])

    def test_rejects_loops(self):
        """Test loops are rejected"""
        with pytest.raises(ArgumentError):
            Graph.from_edges(3, [(1, 1)])

    def test_capacity(self):
        """Test more than 64 vertices is a capacity error"""
        with pytest.raises(CapacityError):
            Graph.empty(65)

    def test_immutable(self):
        """Test graphs cannot be mutated in place"""
        graph = complete_graph(3)
        with pytest.raises(AttributeError):
            graph._n = 4
        smaller = graph.remove_edge(0, 1)
        assert graph.num_edges() == 3
        assert smaller.num_edges() == 2
        assert smaller.add_edge(0, 1) == graph

    def test_induced_relabels(self):
        """Test induced subgraphs are relabelled in the given order"""
        graph = Graph.from_edges(4, [(0, 3), (3, 2)])
        sub = graph.induced([3, 0, 2])
        assert edge_set(sub) == {(0, 1), (0, 2)}

    def test_networkx_conversion(self):
        """Test to_networkx keeps vertices and edges"""
        graph = random_graph(8, 0.4, seed=3)
        converted = graph.to_networkx()
        assert sorted(converted.nodes()) == list(range(8))
        assert {tuple(sorted(e)) for e in converted.edges()} == edge_set(graph)


class TestGraph6:
    def test_complete_graph_encoding(self):
        """Test K_5 encodes as D~{"""
        assert complete_graph(5).to_graph6() == "D~{"
        assert graph_from_graph6("D~{") == complete_graph(5)

    def test_empty_graph_encoding(self):
        """Test the empty graph on 5 vertices is D?? and D? is truncated"""
        assert Graph.empty(5).to_graph6() == "D??"
        assert graph_from_graph6("D??").num_edges() == 0
        with pytest.raises(Graph6ParseError):
            graph_from_graph6("D?")

    def test_header_is_optional(self):
        """Test the >>graph6<< header and surrounding whitespace are ignored"""
        assert graph_from_graph6(">>graph6<<D~{\n") == complete_graph(5)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_networkx(self, seed):
        """Test encoding agrees with networkx in both directions"""
        rng = random.Random(seed)
        n = rng.randint(1, 20)
        graph = random_graph(n, rng.random(), seed)
        expected = nx.to_graph6_bytes(graph.to_networkx(), header=False).decode().strip()
        assert graph.to_graph6() == expected
        decoded = nx.from_graph6_bytes(expected.encode())
        assert {tuple(sorted(e)) for e in decoded.edges()} == edge_set(graph_from_graph6(expected))

    def test_long_form_header(self):
        """Test 63 and 64 vertices use the ~ size form"""
        for n in (63, 64):
            graph = complete_graph(n)
            encoded = graph_to_graph6(graph)
            assert encoded.startswith("~")
            assert graph_from_graph6(encoded) == graph
            assert nx.from_graph6_bytes(encoded.encode()).number_of_edges() == n * (n - 1) // 2

    def test_oversized_long_form(self):
        """Test the 6-byte size form is a capacity error"""
        with pytest.raises(CapacityError):
            graph_from_graph6("~~??????")

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("D??x", 3),
            ("D?@", 2),
            ("D ?", 1),
        ],
    )
    def test_parse_errors_carry_offset(self, text, offset):
        """Test malformed input reports the byte offset"""
        with pytest.raises(Graph6ParseError) as info:
            graph_from_graph6(text)
        assert info.value.offset == offset
        assert info.value.exit_code == 2

    def test_known_string(self):
        """Test DQc decodes to its four edges"""
        assert graph_from_graph6("DQc").edges() == [(0, 2), (0, 4), (1, 3), (3, 4)]

    def test_every_five_vertex_graph_against_plain_reading(self):
        """Test the decoder on all 1024 graphs on 5 vertices"""
        for mask in range(1024):
            text = chr(63 + 5) + chr(63 + (mask >> 4)) + chr(63 + ((mask & 0b1111) << 2))
            graph = graph_from_graph6(text)
            assert edge_set(graph) == reference_decode(text)
            assert graph.to_graph6() == text

    @pytest.mark.parametrize("n", range(1, 7))
    def test_every_small_graph_survives_encoding(self, n):
        """Test encoding then decoding returns every labelled graph on n vertices"""
        for graph in enumerate_graphs(n):
            assert graph_from_graph6(graph.to_graph6()) == graph


class TestConstructors:
    def test_turan_part_sizes(self):
        """Test Turán parts differ by at most one, larger first"""
        assert turan_part_sizes(7, 3) == [3, 2, 2]
        assert turan_part_sizes(2, 3) == [1, 1, 0]

    def test_turan_graph_edges(self):
        """Test T_3(6) = K(2,2,2) has 12 edges"""
        assert turan_graph(6, 3).num_edges() == 12
        assert are_isomorphic(turan_graph(6, 3), complete_multipartite([2, 2, 2]))

    def test_join_turan(self):
        """Test K_1 ∨ T_2(6) = K_1 ∨ K_{3,3} has 15 edges"""
        graph = join_turan(7, 2, 2)
        assert graph.n == 7
        assert graph.num_edges() == 15
        assert graph.degree(0) == 6

    def test_join_and_union(self):
        """Test join adds every cross edge and union adds none"""
        a, b = complete_graph(2), Graph.empty(3)
        assert join(a, b).num_edges() == 1 + 6
        assert disjoint_union(a, b).num_edges() == 1
        assert disjoint_union(a, b).n == 5

    def test_partition_graph(self):
        """Test K_apex ∨ K(parts) from a PartitionSpec"""
        spec = PartitionSpec(1, [2, 4])
        assert spec.parts == (4, 2)
        graph = partition_graph(spec)
        assert graph.n == 7
        assert graph.num_edges() == 6 + 8

    def test_partition_move(self):
        """Test moving one vertex re-sorts the parts"""
        assert PartitionSpec(1, [4, 2]).moved(0, 1).parts == (3, 3)
        with pytest.raises(ArgumentError):
            PartitionSpec(0, [1, 1]).moved(0, 1)

    def test_invalid_arguments(self):
        """Test bad constructor arguments raise ArgumentError"""
        with pytest.raises(ArgumentError):
            turan_graph(5, 0)
        with pytest.raises(ArgumentError):
            complete_multipartite([])
        with pytest.raises(ArgumentError):
            join_turan(1, 3, 2)


class TestIsomorphism:
    def test_cycle_against_two_triangles(self):
        """Test C_6 and 2K_3 are not isomorphic despite equal degrees"""
        cycle = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        triangles = disjoint_union(complete_graph(3), complete_graph(3))
        assert not are_isomorphic(cycle, triangles)

    @pytest.mark.parametrize("seed", range(15))
    def test_relabelled_copies(self, seed):
        """Test a random relabelling is found and is a valid isomorphism"""
        rng = random.Random(seed)
        n = rng.randint(1, 10)
        graph = random_graph(n, rng.random(), seed)
        perm = list(range(n))
        rng.shuffle(perm)
        relabelled = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in graph.edges()])
        mapping = find_isomorphism(graph, relabelled)
        assert mapping is not None
        assert {tuple(sorted((mapping[u], mapping[v]))) for u, v in graph.edges()} == edge_set(relabelled)

    @pytest.mark.parametrize("seed", range(15))
    def test_agrees_with_networkx(self, seed):
        """Test verdicts agree with networkx on random pairs"""
        g1 = random_graph(7, 0.5, seed)
        g2 = random_graph(7, 0.5, seed + 100)
        assert are_isomorphic(g1, g2) == nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())

    def test_capacity(self):
        """Test more than 16 vertices is refused"""
        with pytest.raises(CapacityError):
            are_isomorphic(Graph.empty(17), Graph.empty(17))


class TestMatching:
    def test_matching_number_examples(self):
        """Test μ on K_4, the star K_{1,3} and C_5"""
        assert matching_number(complete_graph(4)) == 2
        assert matching_number(complete_multipartite([1, 3])) == 1
        assert matching_number(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])) == 2
        assert matching_number(Graph.empty(3)) == 0

    @pytest.mark.parametrize("seed", range(10))
    def test_matching_number(self, seed):
        """Test μ(G) against the largest set of pairwise disjoint edges"""
        graph = random_graph(8, 0.3, seed)
        assert matching_number(graph) == largest_disjoint_edges(list(graph.edges()))

    @pytest.mark.parametrize(
        "m, delta, expected",
        [(1, 1, 1), (1, 2, 3), (2, 1, 2), (2, 2, 6), (3, 3, 10), (4, 3, 14)],
    )
    def test_chvatal_hanson_formula(self, m, delta, expected):
        """Test f(m, Δ) = Δm + ⌊Δ/2⌋⌊m/⌈Δ/2⌉⌋"""
        assert chvatal_hanson_bound(m, delta) == expected

    def test_exhaustive_small_cases(self):
        """Test the branch-and-bound maximum on small instances"""
        assert max_edges_bounded(1, 1, 5) == 1
        assert max_edges_bounded(1, 2, 5) == 3
        assert max_edges_bounded(2, 1, 8) == 2

    @pytest.mark.slow
    def test_exhaustive_two_two(self):
        """Test two disjoint triangles are optimal for μ ≤ 2, Δ ≤ 2"""
        assert max_edges_bounded(2, 2, 8) == chvatal_hanson_bound(2, 2)

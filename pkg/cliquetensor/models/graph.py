"""
Graph model: a simple undirected graph on at most 64 vertices with one
bitset per adjacency row.
"""
from typing import Any, Iterable, Iterator, List, Sequence, Tuple

from cliquetensor.core.exceptions import ArgumentError, CapacityError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def list_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood bitset of v."""

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ArgumentError(f"Vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"Graph has {n} vertices; at most {MAX_VERTICES} are supported")
        if len(adj) != n:
            raise ArgumentError(f"Expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        rows = tuple(int(row) for row in adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise ArgumentError(f"Row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ArgumentError(f"Loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ArgumentError(f"Adjacency is not symmetric at ({v}, {u})")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", rows)
        object.__setattr__(self, "_edges", sum(bin(row).count("1") for row in rows) // 2)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are merged."""
        if n > MAX_VERTICES:
            raise CapacityError(f"Graph has {n} vertices; at most {MAX_VERTICES} are supported")
        adj = [0] * max(n, 0)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"Edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"Loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def _trusted(cls, n: int, adj: Tuple[int, ...], edges: int) -> "Graph":
        """Skip validation for rows produced inside this package (enumeration, codec)."""
        graph = object.__new__(cls)
        object.__setattr__(graph, "_n", n)
        object.__setattr__(graph, "_adj", adj)
        object.__setattr__(graph, "_edges", edges)
        return graph

    def __reduce__(self):
        return (Graph, (self._n, self._adj))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def num_edges(self) -> int:
        """e(G)."""
        return self._edges

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(row).count("1") for row in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> List[int]:
        return bits_to_list(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return G + uv."""
        if u == v:
            raise ArgumentError(f"Loop at vertex {u}")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self._n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Return G - uv."""
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self._n, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled in the given vertex order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(list_to_bits(index[u] for u in iter_bits(self._adj[v]) if u in index))
        return Graph(len(vertices), adj)

    def to_graph6(self) -> str:
        from cliquetensor.utils.graph6 import graph_to_graph6
        return graph_to_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        from cliquetensor.utils.graph6 import graph_from_graph6
        return graph_from_graph6(text)

    def to_networkx(self):
        """Convert to a networkx Graph on vertices 0..n-1."""
        import networkx as nx
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._edges})"


class PartitionSpec:
    """Apex clique size plus complete-multipartite part sizes: K_apex ∨ K(s_1, …, s_r)."""

    __slots__ = ("apex", "parts")

    def __init__(self, apex: int, parts: Sequence[int]):
        if apex < 0:
            raise ArgumentError(f"Apex size must be non-negative, got {apex}")
        if not parts:
            raise ArgumentError("Partition needs at least one part")
        if any(s < 1 for s in parts):
            raise ArgumentError(f"Part sizes must be positive, got {list(parts)}")
        self.apex = apex
        self.parts = tuple(sorted(parts, reverse=True))

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return self.apex + sum(self.parts)

    def moved(self, i: int, j: int) -> "PartitionSpec":
        """Move one vertex from part i to part j (indices into ``parts``)."""
        if not (0 <= i < self.r and 0 <= j < self.r) or i == j:
            raise ArgumentError(f"Invalid part indices ({i}, {j}) for {self.r} parts")
        parts = list(self.parts)
        parts[i] -= 1
        parts[j] += 1
        if parts[i] < 1:
            raise ArgumentError("Moving would empty a part")
        return PartitionSpec(self.apex, parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionSpec):
            return NotImplemented
        return self.apex == other.apex and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.apex, self.parts))

    def __repr__(self) -> str:
        return f"PartitionSpec(apex={self.apex}, parts={list(self.parts)})"

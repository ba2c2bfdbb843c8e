"""
Graph constructors and classical graph parameters.
"""
from typing import List, Sequence

import networkx as nx

from cliquetensor.core.exceptions import ArgumentError, CapacityError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.graph import MAX_VERTICES, Graph, PartitionSpec

logger = get_logger(__name__)


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"K_{n} exceeds the {MAX_VERTICES}-vertex capacity")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)), n * (n - 1) // 2)


def turan_part_sizes(n: int, r: int) -> List[int]:
    """Part sizes of T_r(n), larger parts first; may contain zeros when n < r."""
    if r < 1:
        raise ArgumentError(f"r must be at least 1, got {r}")
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K(s_1, ..., s_r): vertices in different parts are adjacent.

    Parts occupy consecutive vertex ranges in the given order.
    """
    if not sizes:
        raise ArgumentError("complete_multipartite needs at least one part")
    if any(s < 1 for s in sizes):
        raise ArgumentError(f"Part sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise CapacityError(f"K{tuple(sizes)} has {n} vertices; at most {MAX_VERTICES} are supported")
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        adj.extend([full & ~part] * s)
        start += s
    edges = (n * n - sum(s * s for s in sizes)) // 2
    return Graph._trusted(n, tuple(adj), edges)


def turan_graph(n: int, r: int) -> Graph:
    """T_r(n): complete r-partite graph with part sizes as equal as possible."""
    sizes = [s for s in turan_part_sizes(n, r) if s > 0]
    if not sizes:
        return Graph.empty(0)
    return complete_multipartite(sizes)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 ∨ G2 with G1's vertices first."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise CapacityError(f"Join has {n1 + n2} vertices; at most {MAX_VERTICES} are supported")
    mask1 = (1 << n1) - 1
    mask2 = ((1 << n2) - 1) << n1
    adj = [row | mask2 for row in g1.adj] + [(row << n1) | mask1 for row in g2.adj]
    edges = g1.num_edges() + g2.num_edges() + n1 * n2
    return Graph._trusted(n1 + n2, tuple(adj), edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 ∪ G2 with G1's vertices first."""
    n1 = g1.n
    if n1 + g2.n > MAX_VERTICES:
        raise CapacityError(f"Union has {n1 + g2.n} vertices; at most {MAX_VERTICES} are supported")
    adj = list(g1.adj) + [row << n1 for row in g2.adj]
    return Graph._trusted(n1 + g2.n, tuple(adj), g1.num_edges() + g2.num_edges())


def partition_graph(spec: PartitionSpec) -> Graph:
    """K_apex ∨ K(s_1, ..., s_r)."""
    return join(complete_graph(spec.apex), complete_multipartite(spec.parts))


def join_turan(n: int, k: int, r: int) -> Graph:
    """K_{k-1} ∨ T_r(n-k+1)."""
    if k < 1:
        raise ArgumentError(f"k must be at least 1, got {k}")
    if n < k - 1:
        raise ArgumentError(f"n={n} is smaller than the apex size k-1={k - 1}")
    return join(complete_graph(k - 1), turan_graph(n - k + 1, r))


def matching_number(graph: Graph) -> int:
    """μ(G), exact (maximum-cardinality blossom matching)."""
    if graph.num_edges() == 0:
        return 0
    matching = nx.max_weight_matching(graph.to_networkx(), maxcardinality=True)
    return len(matching)


def chvatal_hanson_bound(m: int, delta: int) -> int:
    """f(m, Δ) = Δm + ⌊Δ/2⌋·⌊m/⌈Δ/2⌉⌋, the maximum of e(G) over graphs with μ ≤ m and Δ(G) ≤ Δ."""
    if m < 1 or delta < 1:
        raise ArgumentError(f"m and delta must be at least 1, got m={m}, delta={delta}")
    return delta * m + (delta // 2) * (m // ((delta + 1) // 2))


def max_edges_bounded(m: int, delta: int, n: int) -> int:
    """Exhaustive maximum of e(G) over graphs on n vertices with μ(G) ≤ m and Δ(G) ≤ delta.

    Branch and bound over vertex pairs in lexicographic order. Edges are only
    added, so both the degree cap and the matching cap prune monotonically.
    """
    if m < 0 or delta < 0 or n < 0:
        raise ArgumentError("m, delta and n must be non-negative")
    if n > 12:
        raise CapacityError(f"Exhaustive max-edge search is limited to 12 vertices, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    degree = [0] * n
    edges: List[tuple] = []
    best = 0

    def capacity_bound(index: int) -> int:
        slack = sum(delta - d for d in degree)
        return len(edges) + min(len(pairs) - index, slack // 2)

    def search(index: int) -> None:
        nonlocal best
        if len(edges) > best:
            best = len(edges)
        if index == len(pairs) or capacity_bound(index) <= best:
            return
        u, v = pairs[index]
        if degree[u] < delta and degree[v] < delta:
            edges.append((u, v))
            if len(edges) <= m or matching_number(Graph.from_edges(n, edges)) <= m:
                degree[u] += 1
                degree[v] += 1
                search(index + 1)
                degree[u] -= 1
                degree[v] -= 1
            edges.pop()
        search(index + 1)

    search(0)
    logger.debug(f"max_edges_bounded(m={m}, delta={delta}, n={n}) = {best}")
    return best

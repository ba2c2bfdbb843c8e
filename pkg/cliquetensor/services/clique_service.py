"""
Clique engine: fixed-size clique enumeration, clique counts of the
conjectured extremal graphs, t-clique connectivity and clique regularity.
"""
from math import comb
from typing import List, NamedTuple, Optional, Sequence

from networkx.utils import UnionFind

from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.models.cliques import CliqueSet
from cliquetensor.models.graph import Graph, iter_bits, list_to_bits
from cliquetensor.services.graph_service import turan_part_sizes


class CliqueComponents(NamedTuple):
    """Maximal t-clique-walk-connected vertex classes plus the uncovered vertices."""
    components: List[int]
    uncovered: int


def enumerate_cliques(graph: Graph, t: int) -> CliqueSet:
    """All t-cliques of G in lexicographic order of their sorted vertex tuples.

    A partial clique is only extended by higher-numbered common neighbours,
    so each clique is produced exactly once.

    Args:
        graph: Graph on at most 64 vertices
        t: Clique order, at least 1

    Returns:
        CliqueSet of vertex bitmasks
    """
    if t < 1:
        raise ArgumentError(f"Clique order t must be at least 1, got {t}")
    n = graph.n
    adj = graph.adj
    found: List[int] = []
    if t > n:
        return CliqueSet(n, t, found)

    def extend(clique: int, candidates: int, size: int) -> None:
        if size == t:
            found.append(clique)
            return
        need = t - size
        while candidates:
            if bin(candidates).count("1") < need:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            extend(clique | low, candidates & adj[v], size + 1)

    extend(0, graph.vertex_mask, 0)
    return CliqueSet(n, t, found)


def clique_count(graph: Graph, t: int) -> int:
    """c_t(G)."""
    return enumerate_cliques(graph, t).count


def elementary_symmetric(values: Sequence[int], s: int) -> int:
    """e_s(values) with e_0 = 1, exact integer arithmetic."""
    if s < 0:
        return 0
    coefficients = [1] + [0] * s
    for value in values:
        for j in range(s, 0, -1):
            coefficients[j] += coefficients[j - 1] * value
    return coefficients[s]


def count_join_turan_cliques(n: int, k: int, r: int, t: int) -> int:
    """Exact c_t(K_{k-1} ∨ T_r(n-k+1)).

    A t-clique takes j apex vertices and one vertex from each of t-j distinct
    Turán parts: Σ_j C(k-1, j) · e_{t-j}(m_1, ..., m_r).
    """
    if k < 1 or r < 1 or t < 1:
        raise ArgumentError(f"k, r and t must be at least 1, got k={k}, r={r}, t={t}")
    if n < k - 1:
        raise ArgumentError(f"n={n} is smaller than the apex size k-1={k - 1}")
    parts = turan_part_sizes(n - k + 1, r)
    return sum(comb(k - 1, j) * elementary_symmetric(parts, t - j) for j in range(min(k - 1, t) + 1))


def _require_order(t: int) -> None:
    if t < 2:
        raise ArgumentError(f"Clique order t must be at least 2, got {t}")


def clique_components(graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> CliqueComponents:
    """Partition the clique-covered vertices into t-clique-connected classes."""
    _require_order(t)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, t)
    forest = UnionFind()
    for clique in cliques:
        members = list(iter_bits(clique))
        forest.union(*members)
    components = [list_to_bits(group) for group in forest.to_sets()]
    components.sort(key=lambda mask: mask & -mask)
    return CliqueComponents(components=components, uncovered=graph.vertex_mask & ~cliques.covered)


def clique_connected(graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> bool:
    """True iff every vertex lies in a t-clique and all t-cliques form one walk class."""
    _require_order(t)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, t)
    if not cliques.count:
        return False
    split = clique_components(graph, t, cliques)
    return split.uncovered == 0 and len(split.components) == 1


def is_clique_regular(graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> bool:
    """True iff every vertex lies in the same number of t-cliques."""
    _require_order(t)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, t)
    counts = cliques.vertex_counts()
    return len(set(counts)) <= 1

"""
kK_{r+1}-freeness: search for k pairwise vertex-disjoint (r+1)-cliques.
"""
from typing import List, Optional

from cliquetensor.models.cliques import CliqueSet
from cliquetensor.models.graph import Graph
from cliquetensor.models.packing import FreenessQuery, Packing
from cliquetensor.services.clique_service import enumerate_cliques


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def find_disjoint_packing(
    graph: Graph, query: FreenessQuery, cliques: Optional[CliqueSet] = None
) -> Optional[Packing]:
    """Lexicographically first packing of k disjoint (r+1)-cliques, or None.

    ``cliques`` may be passed in when the (r+1)-cliques are already known.

    Args:
        graph: Graph to search
        query: k and r of the pattern kK_{r+1}
        cliques: Precomputed (r+1)-cliques

    Returns:
        Packing of k pairwise disjoint cliques, or None when G is kK_{r+1}-free
    """
    k, size = query.k, query.clique_order
    if graph.n < query.pattern_order:
        return None
    if cliques is None or cliques.t != size:
        cliques = enumerate_cliques(graph, size)
    pool = cliques.cliques
    if len(pool) < k:
        return None

    chosen: List[int] = []

    def search(start: int, used: int) -> bool:
        if len(chosen) == k:
            return True
        need = k - len(chosen)
        compatible = [c for c in pool[start:] if not c & used]
        if len(compatible) < need:
            return False
        reach = 0
        for c in compatible:
            reach |= c
        if _popcount(reach) < need * size:
            return False
        for index in range(start, len(pool)):
            clique = pool[index]
            if clique & used:
                continue
            chosen.append(clique)
            if search(index + 1, used | clique):
                return True
            chosen.pop()
        return False

    return Packing(chosen) if search(0, 0) else None


def is_free(graph: Graph, query: FreenessQuery, cliques: Optional[CliqueSet] = None) -> bool:
    """True iff G contains no kK_{r+1}."""
    return find_disjoint_packing(graph, query, cliques) is None

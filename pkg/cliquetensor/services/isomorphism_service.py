"""
Isomorphism testing for small graphs: colour refinement followed by
backtracking over vertices of equal colour.
"""
from typing import Dict, List, Optional, Tuple

from cliquetensor.core.exceptions import CapacityError
from cliquetensor.models.graph import Graph, iter_bits

MAX_ISOMORPHISM_VERTICES = 16


def _refine(g1: Graph, g2: Graph) -> Tuple[List[int], List[int]]:
    """Joint colour refinement starting from degrees.

    Colour ids are shared between both graphs so that equal ids mean equal
    refinement histories.
    """
    colours1 = g1.degrees()
    colours2 = g2.degrees()
    while True:
        palette: Dict[tuple, int] = {}
        new1 = []
        new2 = []
        for graph, colours, out in ((g1, colours1, new1), (g2, colours2, new2)):
            for v in range(graph.n):
                signature = (colours[v], tuple(sorted(colours[u] for u in iter_bits(graph.adj[v]))))
                out.append(palette.setdefault(signature, len(palette)))
        stable = len(set(new1) | set(new2)) == len(set(colours1) | set(colours2))
        colours1, colours2 = new1, new2
        if stable:
            return colours1, colours2


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[List[int]]:
    """Return a mapping ``phi`` with uv ∈ E(G1) ⇔ phi(u)phi(v) ∈ E(G2), or None."""
    for graph in (g1, g2):
        if graph.n > MAX_ISOMORPHISM_VERTICES:
            raise CapacityError(
                f"Isomorphism testing supports at most {MAX_ISOMORPHISM_VERTICES} vertices, got {graph.n}"
            )
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return []

    colours1, colours2 = _refine(g1, g2)
    if sorted(colours1) != sorted(colours2):
        return None

    # Smallest colour classes first, then neighbours of already placed vertices.
    class_size: Dict[int, int] = {}
    for c in colours1:
        class_size[c] = class_size.get(c, 0) + 1
    order: List[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-bin(g1.adj[u] & placed).count("1"), class_size[colours1[u]], u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    candidates = {c: [w for w in range(n) if colours2[w] == c] for c in set(colours2)}
    mapping = [-1] * n
    used = 0

    def consistent(v: int, w: int) -> bool:
        # Adjacency towards already mapped vertices must agree.
        for u in range(n):
            image = mapping[u]
            if image < 0:
                continue
            if (g1.adj[v] >> u & 1) != (g2.adj[w] >> image & 1):
                return False
        return True

    def backtrack(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[colours1[v]]:
            if used >> w & 1 or not consistent(v, w):
                continue
            mapping[v] = w
            used |= 1 << w
            if backtrack(depth + 1):
                return True
            mapping[v] = -1
            used &= ~(1 << w)
        return False

    return list(mapping) if backtrack(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff an edge-preserving bijection V(G1) → V(G2) exists."""
    return find_isomorphism(g1, g2) is not None

from typing import List, Sequence

from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.models.graph import bits_to_list


class FreenessQuery:
    """The forbidden pattern kK_{r+1}."""

    __slots__ = ("k", "r")

    def __init__(self, k: int, r: int):
        if k < 1 or r < 1:
            raise ArgumentError(f"k and r must be at least 1, got k={k}, r={r}")
        self.k = k
        self.r = r

    @property
    def clique_order(self) -> int:
        return self.r + 1

    @property
    def pattern_order(self) -> int:
        """Vertices needed by kK_{r+1}."""
        return self.k * (self.r + 1)

    def __repr__(self) -> str:
        return f"FreenessQuery(k={self.k}, r={self.r})"


class Packing:
    """k pairwise vertex-disjoint (r+1)-cliques, as bitsets."""

    __slots__ = ("cliques",)

    def __init__(self, cliques: Sequence[int]):
        self.cliques = tuple(cliques)

    def vertex_lists(self) -> List[List[int]]:
        return [bits_to_list(c) for c in self.cliques]

    def __len__(self) -> int:
        return len(self.cliques)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Packing):
            return NotImplemented
        return self.cliques == other.cliques

    def __repr__(self) -> str:
        return f"Packing({self.vertex_lists()})"

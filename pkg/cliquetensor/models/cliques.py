"""
CliqueSet: all t-cliques of a graph with a per-vertex incidence index.

The clique list is the edge set of the t-clique hypergraph; the t-clique
tensor is never materialised, every tensor operation reads it from here.
"""
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from cliquetensor.models.graph import bits_to_list


class CliqueSet:
    """Immutable list of t-cliques (bitsets) in lexicographic order."""

    def __init__(self, n: int, t: int, cliques: Sequence[int]):
        self.n = n
        self.t = t
        self.cliques: Tuple[int, ...] = tuple(cliques)
        incidence: List[List[int]] = [[] for _ in range(n)]
        for index, clique in enumerate(self.cliques):
            for v in bits_to_list(clique):
                incidence[v].append(index)
        self.incidence: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in incidence)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def count(self) -> int:
        """c_t(G)."""
        return len(self.cliques)

    @cached_property
    def tuples(self) -> List[Tuple[int, ...]]:
        """Sorted vertex tuples of the cliques."""
        return [tuple(bits_to_list(c)) for c in self.cliques]

    @cached_property
    def index_array(self) -> np.ndarray:
        """(c_t, t) integer array of clique members, row i = tuples[i]."""
        if not self.cliques:
            return np.zeros((0, self.t), dtype=np.intp)
        return np.array(self.tuples, dtype=np.intp)

    def vertex_counts(self) -> List[int]:
        """Number of t-cliques through each vertex."""
        return [len(row) for row in self.incidence]

    @cached_property
    def covered(self) -> int:
        """Bitset of vertices lying in at least one t-clique."""
        mask = 0
        for c in self.cliques:
            mask |= c
        return mask

    def restrict(self, vertices: Sequence[int]) -> "CliqueSet":
        """Cliques inside ``vertices``, relabelled to 0..len(vertices)-1 in the given order."""
        allowed = 0
        index = {}
        for i, v in enumerate(vertices):
            allowed |= 1 << v
            index[v] = i
        local = []
        for c in self.cliques:
            if c & ~allowed:
                continue
            mask = 0
            for v in bits_to_list(c):
                mask |= 1 << index[v]
            local.append(mask)
        local.sort(key=lambda m: bits_to_list(m))
        return CliqueSet(len(vertices), self.t, local)

    def __repr__(self) -> str:
        return f"CliqueSet(n={self.n}, t={self.t}, count={self.count})"

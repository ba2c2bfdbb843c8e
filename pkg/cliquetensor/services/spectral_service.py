"""
Tensor spectra of the t-clique tensor A_t(G).

With entries 1/(t-1)! on every permutation of a t-clique,
(A x^{t-1})_j = Σ_{e ∈ C_t, j ∈ e} Π_{v ∈ e, v ≠ j} x_v, so the tensor is
applied straight from the clique list.
"""
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from cliquetensor.core.config import SolverSettings
from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.cliques import CliqueSet
from cliquetensor.models.graph import Graph, bits_to_list
from cliquetensor.schemas.spectral import ComponentSpectrum, SpectralResult
from cliquetensor.services.clique_service import clique_components, enumerate_cliques

logger = get_logger(__name__)

NORM_TOLERANCE = 1e-9


def _as_vector(cliques: CliqueSet, x: Sequence[float]) -> np.ndarray:
    vector = np.asarray(x, dtype=float)
    if vector.ndim != 1 or vector.shape[0] != cliques.n:
        raise ArgumentError(f"Vector length {vector.shape} does not match n={cliques.n}")
    if np.any(vector < 0):
        raise ArgumentError("Vector entries must be non-negative")
    return vector


def apply_tensor(cliques: CliqueSet, x: Sequence[float]) -> np.ndarray:
    """A x^{t-1}; zero at vertices in no t-clique.

    Args:
        cliques: t-cliques of the graph
        x: Non-negative vector of length n

    Returns:
        Entry j is the sum over t-cliques through j of the product of the other members
    """
    vector = _as_vector(cliques, x)
    result = np.zeros(cliques.n)
    if not cliques.count:
        return result
    members = cliques.index_array
    values = vector[members]
    for position in range(cliques.t):
        others = np.prod(np.delete(values, position, axis=1), axis=1)
        np.add.at(result, members[:, position], others)
    return result


def lt_norm(x: Sequence[float], t: int) -> float:
    """‖x‖_t for a non-negative vector."""
    vector = np.asarray(x, dtype=float)
    return float(np.sum(vector ** t) ** (1.0 / t))


def rayleigh(cliques: CliqueSet, x: Sequence[float]) -> float:
    """t · Σ_{e ∈ C_t} Π_{v ∈ e} x_v for ‖x‖_t = 1.

    Args:
        cliques: t-cliques of the graph
        x: Non-negative vector with unit l_t norm

    Returns:
        The form x^T (A x^{t-1}); never above ρ_t(G)

    Raises:
        ArgumentError: If x is negative somewhere or not of unit norm
    """
    vector = _as_vector(cliques, x)
    norm = lt_norm(vector, cliques.t)
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ArgumentError(f"Vector must have unit l_{cliques.t} norm, got {norm!r}")
    if not cliques.count:
        return 0.0
    return float(cliques.t * np.sum(np.prod(vector[cliques.index_array], axis=1)))


def eigen_residual(cliques: CliqueSet, lam: float, x: Sequence[float]) -> float:
    """max_j |(A x^{t-1})_j − λ x_j^{t-1}| over the support of x."""
    vector = _as_vector(cliques, x)
    support = vector > 0
    if not np.any(support):
        return 0.0
    gap = np.abs(apply_tensor(cliques, vector) - lam * vector ** (cliques.t - 1))
    return float(np.max(gap[support]))


def normalize_max(x: Sequence[float]) -> List[float]:
    """Rescale so the largest entry equals 1."""
    vector = np.asarray(x, dtype=float)
    peak = float(np.max(vector)) if vector.size else 0.0
    if peak <= 0:
        return vector.tolist()
    return (vector / peak).tolist()


def weakly_irreducible(graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> bool:
    """True iff the representation digraph of A_t(G) is strongly connected.

    Arc i → j whenever some non-zero entry a_{i i_2 ... i_t} has j among
    i_2..i_t, i.e. i and j share a t-clique.

    Args:
        graph: Graph to test
        t: Clique order, 2 <= t <= n
        cliques: Precomputed t-cliques, enumerated when omitted

    Returns:
        False whenever some vertex lies in no t-clique
    """
    _check_order(graph, t)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, t)
    if not cliques.count:
        return False
    rows: List[int] = []
    cols: List[int] = []
    for members in cliques.tuples:
        for i in members:
            for j in members:
                if i != j:
                    rows.append(i)
                    cols.append(j)
    digraph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(graph.n, graph.n)).tocsr()
    count, _ = connected_components(digraph, directed=True, connection="strong")
    return count == 1


def rho_upper_bound(graph: Graph, cliques: CliqueSet) -> float:
    """A cheap sound upper bound on ρ_t(G).

    Max row sum of A_t(G) (the largest number of t-cliques through a vertex),
    and at t = 2 additionally √(2e − n' + 1) over the n' non-isolated vertices.
    """
    counts = cliques.vertex_counts()
    bound = float(max(counts, default=0))
    if cliques.t == 2:
        edges = graph.num_edges()
        if edges == 0:
            return 0.0
        active = sum(1 for row in graph.adj if row)
        bound = min(bound, math.sqrt(2 * edges - active + 1))
    return bound


def _check_order(graph: Graph, t: int) -> None:
    if t < 2 or t > graph.n:
        raise ArgumentError(f"Clique order must satisfy 2 <= t <= n, got t={t}, n={graph.n}")


class SpectralService:
    """Shifted power iteration for ρ_t(G), one run per t-clique component."""

    def __init__(self, solver: Optional[SolverSettings] = None):
        self.solver = solver or SolverSettings()

    def _iterate(self, local: CliqueSet, start: Optional[np.ndarray] = None) -> Tuple[np.ndarray, float, float, int, bool]:
        """Iterate on one weakly irreducible block; returns (x, λ_min, λ_max, iterations, converged)."""
        t = local.t
        m = local.n
        tol = self.solver.tol
        shift = self.solver.shift
        x = np.full(m, m ** (-1.0 / t)) if start is None else start / lt_norm(start, t)
        best_low, best_high = 0.0, math.inf
        for iteration in range(1, self.solver.max_iters + 1):
            y = apply_tensor(local, x)
            powered = x ** (t - 1)
            ratios = y / powered
            low, high = float(ratios.min()), float(ratios.max())
            best_low, best_high = max(best_low, low), min(best_high, high)
            if high - low <= tol:
                return x, low, high, iteration, True
            z = (y + shift * powered) ** (1.0 / (t - 1))
            x = z / lt_norm(z, t)
        return x, best_low, best_high, self.solver.max_iters, False

    def component_spectrum(
        self, cliques: CliqueSet, vertices: List[int], start: Optional[Sequence[float]] = None
    ) -> ComponentSpectrum:
        """Run the iteration on the component spanned by ``vertices``.

        Args:
            cliques: t-cliques of the whole graph
            vertices: Vertices of one t-clique component, in the order of the local vector
            start: Positive starting vector of length ``len(vertices)``; uniform when omitted

        Returns:
            ComponentSpectrum with the bracket [λ_min, λ_max] and ``rho`` as its midpoint
        """
        local = cliques.restrict(vertices)
        initial = None if start is None else np.asarray(start, dtype=float)
        x, low, high, iterations, converged = self._iterate(local, initial)
        if not converged:
            logger.warning(
                f"Power iteration did not converge on component {vertices}: "
                f"bounds [{low!r}, {high!r}] after {iterations} iterations"
            )
        else:
            logger.debug(f"Component {vertices} converged in {iterations} iterations, gap {high - low:.3e}")
        return ComponentSpectrum(
            vertices=vertices,
            rho=(low + high) / 2,
            vector=x.tolist(),
            iterations=iterations,
            lambda_min=low,
            lambda_max=high,
            gap=high - low,
            converged=converged,
        )

    def spectral_radius(self, graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> SpectralResult:
        """ρ_t(G): maximum over t-clique components of the component ρ.

        Args:
            graph: Graph on n vertices
            t: Clique order, 2 <= t <= n
            cliques: Precomputed t-cliques, enumerated when omitted

        Returns:
            SpectralResult with one entry per component; ``rho`` is 0 and
            ``winning_component`` is -1 when G has no t-clique

        Raises:
            ArgumentError: If t is out of range
        """
        _check_order(graph, t)
        cliques = cliques if cliques is not None else enumerate_cliques(graph, t)
        split = clique_components(graph, t, cliques)
        components = [self.component_spectrum(cliques, bits_to_list(mask)) for mask in split.components]

        winner = -1
        rho = 0.0
        residual = 0.0
        for index, component in enumerate(components):
            if winner < 0 or component.rho > rho:
                winner, rho = index, component.rho
        if winner >= 0:
            best = components[winner]
            local = cliques.restrict(best.vertices)
            residual = eigen_residual(local, best.rho, best.vector)

        return SpectralResult(
            n=graph.n,
            t=t,
            rho=rho,
            clique_count=cliques.count,
            components=components,
            uncovered=bits_to_list(split.uncovered),
            winning_component=winner,
            residual=residual,
            converged=all(c.converged for c in components),
            tol=self.solver.tol,
            shift=self.solver.shift,
        )

    def rho(self, graph: Graph, t: int, cliques: Optional[CliqueSet] = None) -> float:
        """Shortcut for ``spectral_radius(...).rho``."""
        return self.spectral_radius(graph, t, cliques).rho

"""
Checks of the structural lemmas behind the extremal theorems: the
clique-count lower bound, part balancing, strict monotonicity, connectivity
of maximizers, the connectivity/irreducibility equivalence, the
Chvátal–Hanson edge bound and the connectivity augmentation step.
"""
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.graph import Graph, PartitionSpec, bits_to_list, iter_bits
from cliquetensor.models.packing import FreenessQuery
from cliquetensor.schemas.reports import (
    AugmentationReport,
    BalancingGridReport,
    BalancingReport,
    ChvatalHansonCase,
    ChvatalHansonReport,
    ConnectivityEquivalenceReport,
    ConnectivityMismatch,
    LowerBoundReport,
    MaximizerConnectivityReport,
    MonotonicityBatchReport,
    MonotonicityReport,
)
from cliquetensor.schemas.scan import ScanRecord
from cliquetensor.services.clique_service import (
    clique_connected,
    count_join_turan_cliques,
    enumerate_cliques,
    is_clique_regular,
)
from cliquetensor.services.graph_service import chvatal_hanson_bound, max_edges_bounded, partition_graph
from cliquetensor.services.packing_service import is_free
from cliquetensor.services.scan_service import conjectured_extremal, enumerate_graphs
from cliquetensor.services.spectral_service import SpectralService, weakly_irreducible
from cliquetensor.utils.graph6 import graph_from_graph6

logger = get_logger(__name__)

LOWER_BOUND_SLACK = 1e-9
EQUALITY_TOLERANCE = 1e-8
BALANCING_MARGIN = 1e-8
STRICT_MARGIN = 1e-10
CHVATAL_HANSON_CASES = ((1, 1), (1, 2), (2, 1), (2, 2))


def part_vectors(r: int, max_total: int, min_total: int = 0) -> Iterator[Tuple[int, ...]]:
    """Non-increasing vectors of r positive parts with min_total <= sum <= max_total."""

    def extend(prefix: List[int], remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == r:
            if sum(prefix) >= min_total:
                yield tuple(prefix)
            return
        slots = r - len(prefix) - 1
        for size in range(min(cap, remaining - slots), 0, -1):
            yield from extend(prefix + [size], remaining - size, size)

    yield from extend([], max_total, max_total)


class VerificationService:
    """Property checks on top of the spectral solver."""

    def __init__(self, spectral: Optional[SpectralService] = None):
        self.spectral = spectral or SpectralService()
        self._partition_cache: Dict[Tuple[PartitionSpec, int], float] = {}

    def _partition_rho(self, spec: PartitionSpec, t: int) -> float:
        key = (spec, t)
        if key not in self._partition_cache:
            graph = partition_graph(spec)
            self._partition_cache[key] = self.spectral.rho(graph, t) if t <= graph.n else 0.0
        return self._partition_cache[key]

    def check_lower_bound(self, n: int, k: int, r: int, t: int) -> LowerBoundReport:
        """ρ_t(K_{k-1} ∨ T_r(n-k+1)) ≥ (t/n)·c_t, with equality when clique-regular."""
        graph = conjectured_extremal(n, k, r)
        if t < 2 or t > n:
            raise ArgumentError(f"Clique order must satisfy 2 <= t <= n, got t={t}, n={n}")
        cliques = enumerate_cliques(graph, t)
        rho = self.spectral.rho(graph, t, cliques)
        count = count_join_turan_cliques(n, k, r, t)
        bound = t / n * count
        regular = is_clique_regular(graph, t, cliques)
        equality = abs(rho - bound) <= EQUALITY_TOLERANCE
        passed = rho >= bound - LOWER_BOUND_SLACK and (equality or not regular)
        return LowerBoundReport(
            n=n,
            k=k,
            r=r,
            t=t,
            rho=rho,
            clique_count=count,
            bound=bound,
            leading_term=comb(r - 1, t - 1) * (n / r) ** (t - 1),
            clique_regular=regular,
            equality=equality,
            passed=passed,
        )

    def verify_balancing(self, k: int, t: int, parts: Sequence[int], i: int, j: int) -> BalancingReport:
        """Move one vertex from part i to part j when s_i − s_j ≥ 2 and compare ρ_t."""
        if k < 1:
            raise ArgumentError(f"k must be at least 1, got {k}")
        before = PartitionSpec(k - 1, parts)
        if not (0 <= i < before.r and 0 <= j < before.r):
            raise ArgumentError(f"Part indices ({i}, {j}) out of range for {before.r} parts")
        if before.parts[i] - before.parts[j] < 2:
            raise ArgumentError(
                f"Balancing needs s_i - s_j >= 2, got s_{i}={before.parts[i]}, s_{j}={before.parts[j]}"
            )
        after = before.moved(i, j)
        rho_before = self._partition_rho(before, t)
        rho_after = self._partition_rho(after, t)
        margin = rho_after - rho_before
        return BalancingReport(
            k=k,
            t=t,
            parts_before=list(before.parts),
            parts_after=list(after.parts),
            i=i,
            j=j,
            rho_before=rho_before,
            rho_after=rho_after,
            margin=margin,
            increased=margin > BALANCING_MARGIN,
        )

    def balancing_grid(
        self, ks: Sequence[int] = (2, 3), rs: Sequence[int] = (2, 3), max_total: int = 12
    ) -> BalancingGridReport:
        """Every unbalanced move on the (k, r, t, parts) grid must increase ρ_t."""
        cases = 0
        failures: List[BalancingReport] = []
        min_margin: Optional[float] = None
        for k in ks:
            for r in rs:
                for t in range(2, r + 1):
                    for parts in part_vectors(r, max_total):
                        for i in range(r):
                            for j in range(r):
                                if parts[i] - parts[j] < 2:
                                    continue
                                report = self.verify_balancing(k, t, parts, i, j)
                                cases += 1
                                min_margin = report.margin if min_margin is None else min(min_margin, report.margin)
                                if not report.increased:
                                    failures.append(report)
        logger.info(f"Balancing grid: {cases} moves, {len(failures)} failures, min margin {min_margin!r}")
        return BalancingGridReport(cases=cases, min_margin=min_margin, failures=failures, passed=not failures)

    def verify_monotonicity(self, graph: Graph, u: int, v: int, t: int) -> MonotonicityReport:
        """Adding uv must strictly raise ρ_t when G+uv is t-clique connected and gains a t-clique."""
        if not (0 <= u < graph.n and 0 <= v < graph.n) or u == v:
            raise ArgumentError(f"Invalid vertex pair ({u}, {v}) for n={graph.n}")
        if graph.has_edge(u, v):
            raise ArgumentError(f"Edge ({u}, {v}) is already present")
        if t < 2 or t > graph.n:
            raise ArgumentError(f"Clique order must satisfy 2 <= t <= n, got t={t}, n={graph.n}")
        grown = graph.add_edge(u, v)
        base = dict(graph6=graph.to_graph6(), edge=[min(u, v), max(u, v)], t=t)
        cliques = enumerate_cliques(graph, t)
        grown_cliques = enumerate_cliques(grown, t)
        if grown_cliques.count == cliques.count:
            return MonotonicityReport(**base, applicable=False, reason="no new t-clique")
        if not clique_connected(grown, t, grown_cliques):
            return MonotonicityReport(**base, applicable=False, reason="G+uv is not t-clique connected")
        rho_before = self.spectral.rho(graph, t, cliques)
        rho_after = self.spectral.rho(grown, t, grown_cliques)
        return MonotonicityReport(
            **base,
            applicable=True,
            rho_before=rho_before,
            rho_after=rho_after,
            strict=rho_after > rho_before + STRICT_MARGIN,
        )

    def monotonicity_batch(
        self, count: int, n: int, t: int, seed: int = 0, max_attempts: Optional[int] = None
    ) -> MonotonicityBatchReport:
        """Random (G, uv) pairs meeting the monotonicity hypotheses."""
        if count < 1:
            raise ArgumentError(f"count must be positive, got {count}")
        if t < 2 or t > n:
            raise ArgumentError(f"Clique order must satisfy 2 <= t <= n, got t={t}, n={n}")
        rng = np.random.default_rng(seed)
        limit = max_attempts or count * 200
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        checked = 0
        attempts = 0
        min_increase: Optional[float] = None
        failures: List[MonotonicityReport] = []
        while checked < count and attempts < limit:
            attempts += 1
            density = rng.uniform(0.4, 0.95)
            present = rng.random(len(pairs)) < density
            missing = [p for p, keep in zip(pairs, present) if not keep]
            if not missing:
                continue
            graph = Graph.from_edges(n, [p for p, keep in zip(pairs, present) if keep])
            u, v = missing[int(rng.integers(len(missing)))]
            report = self.verify_monotonicity(graph, u, v, t)
            if not report.applicable:
                continue
            checked += 1
            increase = report.rho_after - report.rho_before
            min_increase = increase if min_increase is None else min(min_increase, increase)
            if not report.strict:
                failures.append(report)
        return MonotonicityBatchReport(
            n=n,
            t=t,
            seed=seed,
            requested=count,
            checked=checked,
            attempts=attempts,
            min_increase=min_increase,
            failures=failures,
            passed=checked == count and not failures,
        )

    def maximizer_connectivity_check(self, record: ScanRecord, t: Optional[int] = None) -> MaximizerConnectivityReport:
        """Every maximizer of a completed scan must be t-clique connected."""
        t = t if t is not None else record.params.t
        disconnected = [g for g in record.maximizers if not clique_connected(graph_from_graph6(g), t)]
        return MaximizerConnectivityReport(
            t=t, maximizers=len(record.maximizers), disconnected=disconnected, passed=not disconnected
        )

    def connectivity_equivalence(self, max_n: int = 6, min_n: int = 2) -> ConnectivityEquivalenceReport:
        """weakly_irreducible(G, t) == clique_connected(G, t) on every graph with min_n <= n <= max_n."""
        graphs = 0
        checks = 0
        mismatches: List[ConnectivityMismatch] = []
        for n in range(max(min_n, 2), max_n + 1):
            for graph in enumerate_graphs(n):
                graphs += 1
                for t in range(2, n + 1):
                    cliques = enumerate_cliques(graph, t)
                    irreducible = weakly_irreducible(graph, t, cliques)
                    connected = clique_connected(graph, t, cliques)
                    checks += 1
                    if irreducible != connected:
                        mismatches.append(
                            ConnectivityMismatch(
                                graph6=graph.to_graph6(),
                                t=t,
                                weakly_irreducible=irreducible,
                                clique_connected=connected,
                            )
                        )
        logger.info(f"Connectivity equivalence: {checks} checks on {graphs} graphs, {len(mismatches)} mismatches")
        return ConnectivityEquivalenceReport(
            max_n=max_n, graphs=graphs, checks=checks, mismatches=mismatches, passed=not mismatches
        )

    def chvatal_hanson(
        self,
        max_m: int = 50,
        max_delta: int = 50,
        cases: Sequence[Tuple[int, int]] = CHVATAL_HANSON_CASES,
    ) -> ChvatalHansonReport:
        """f(m, Δ) ≤ (Δ+1)m on the grid, and f equals the exhaustive maximum on small cases."""
        bound_holds = all(
            chvatal_hanson_bound(m, d) <= (d + 1) * m for m in range(1, max_m + 1) for d in range(1, max_delta + 1)
        )
        results = []
        for m, delta in cases:
            vertices = 3 * m + 2
            formula = chvatal_hanson_bound(m, delta)
            exhaustive = max_edges_bounded(m, delta, vertices)
            results.append(
                ChvatalHansonCase(
                    m=m, delta=delta, vertices=vertices, formula=formula, exhaustive=exhaustive,
                    agree=formula == exhaustive,
                )
            )
        return ChvatalHansonReport(
            max_m=max_m,
            max_delta=max_delta,
            bound_holds=bound_holds,
            cases=results,
            passed=bound_holds and all(c.agree for c in results),
        )

    def verify_augmentation(self, graph: Graph, k: int, r: int, t: int) -> AugmentationReport:
        """Attach an outside vertex to the winning t-clique component.

        u is the lowest vertex outside the component of maximal ρ_t, C1 the
        lexicographically first t-clique of that component with the most
        neighbours of u, v_1 < ... < v_s the non-neighbours of u in C1; the
        edges u v_1, ..., u v_{s-1} are added.
        """
        query = FreenessQuery(k, r)
        base = dict(graph6=graph.to_graph6(), k=k, r=r, t=t)
        if t < 2 or t > graph.n:
            raise ArgumentError(f"Clique order must satisfy 2 <= t <= n, got t={t}, n={graph.n}")
        if t > r:
            return AugmentationReport(**base, applicable=False, reason="requires t <= r")
        if not is_free(graph, query):
            return AugmentationReport(**base, applicable=False, reason="graph contains kK_{r+1}")
        cliques = enumerate_cliques(graph, t)
        if not cliques.count:
            return AugmentationReport(**base, applicable=False, reason="graph has no t-clique")
        if clique_connected(graph, t, cliques):
            return AugmentationReport(**base, applicable=False, reason="graph is already t-clique connected")

        before = self.spectral.spectral_radius(graph, t, cliques)
        winning = 0
        for w in before.components[before.winning_component].vertices:
            winning |= 1 << w
        outside = graph.vertex_mask & ~winning
        u = (outside & -outside).bit_length() - 1

        best_clique = None
        best_hits = -1
        for clique in cliques:
            if clique & ~winning:
                continue
            hits = bin(clique & graph.adj[u]).count("1")
            if hits > best_hits:
                best_clique, best_hits = clique, hits
        strangers = bits_to_list(best_clique & ~graph.adj[u])
        added = [[u, v] for v in strangers[:-1]]

        grown = graph
        for a, b in added:
            grown = grown.add_edge(a, b)
        rho_after = self.spectral.rho(grown, t)
        still_free = is_free(grown, query)
        return AugmentationReport(
            **base,
            applicable=True,
            vertex=u,
            added_edges=[sorted(edge) for edge in added],
            still_free=still_free,
            rho_before=before.rho,
            rho_after=rho_after,
            increased=rho_after > before.rho + STRICT_MARGIN,
        )

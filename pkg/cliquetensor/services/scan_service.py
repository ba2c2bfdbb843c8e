"""
Exhaustive scans for the ρ_t-maximizer among kK_{r+1}-free graphs.

Work is split into chunks; each chunk produces a ScanAccumulator and
accumulators merge associatively, so a parallel scan yields the same record
as a sequential one. Pruning only skips graphs whose upper bound lies below
the current best minus the tie tolerance; the current best never exceeds the
final best, so pruned graphs can never belong to the maximizer set.
"""
import math
import multiprocessing
import sys
from itertools import chain, islice
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from cliquetensor.core.config import ScanSettings, SolverSettings
from cliquetensor.core.exceptions import ArgumentError, CapacityError, CliqueTensorException, PopulationError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.graph import Graph
from cliquetensor.models.packing import FreenessQuery
from cliquetensor.schemas.scan import (
    ConjecturedSummary,
    PopulationInfo,
    ScanParams,
    ScanRecord,
    ThresholdRow,
    ThresholdTable,
)
from cliquetensor.services.clique_service import enumerate_cliques
from cliquetensor.services.graph_service import join_turan
from cliquetensor.services.isomorphism_service import MAX_ISOMORPHISM_VERTICES, are_isomorphic
from cliquetensor.services.packing_service import is_free
from cliquetensor.services.spectral_service import SpectralService, rho_upper_bound
from cliquetensor.utils.graph6 import graph_from_graph6, graph_to_graph6

logger = get_logger(__name__)

MAX_ENUMERATION_VERTICES = 7
CLIQUE_BOUND_SLACK = 1e-9


def same_shape(graph: Graph, other: Graph) -> bool:
    """Isomorphism for the verdict; graphs beyond the in-house tester go to networkx."""
    if max(graph.n, other.n) <= MAX_ISOMORPHISM_VERTICES:
        return are_isomorphic(graph, other)
    return nx.is_isomorphic(graph.to_networkx(), other.to_networkx())


def conjectured_extremal(n: int, k: int, r: int) -> Graph:
    """K_{k-1} ∨ T_r(n-k+1)."""
    if k < 1 or r < 1:
        raise ArgumentError(f"k and r must be at least 1, got k={k}, r={r}")
    if n < k - 1 + r:
        raise ArgumentError(f"n={n} is too small: need n >= k-1+r = {k - 1 + r}")
    return join_turan(n, k, r)


def vertex_pairs(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int, pairs: Sequence[Tuple[int, int]]) -> Graph:
    """Graph whose edge i is present iff bit i of ``mask`` is set."""
    adj = [0] * n
    edges = 0
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        edges += 1
        mask ^= low
    return Graph._trusted(n, tuple(adj), edges)


def enumerate_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """All 2^{C(n,2)} labelled graphs on n vertices in edge-mask order."""
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    if n > MAX_ENUMERATION_VERTICES:
        raise CapacityError(
            f"Internal enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices; use a graph6 stream for n={n}"
        )
    pairs = vertex_pairs(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield graph_from_mask(n, mask, pairs)


class EnumeratedPopulation:
    """Every labelled graph on n vertices; contains a labelled copy of every n-vertex graph."""

    source = "enumeration"
    contains_all_graphs = True

    def __init__(self, n: int):
        if n > MAX_ENUMERATION_VERTICES:
            raise CapacityError(
                f"Internal enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices; use a graph6 stream for n={n}"
            )
        self.n = n
        self.total = 1 << (n * (n - 1) // 2)

    @property
    def descriptor(self) -> str:
        return f"all labelled graphs on {self.n} vertices"

    def chunk_count(self, chunk_size: int) -> int:
        return -(-self.total // chunk_size)

    def tasks(self, chunk_size: int) -> Iterator[tuple]:
        for lo in range(0, self.total, chunk_size):
            yield ("masks", self.n, lo, min(lo + chunk_size, self.total))


class Graph6Population:
    """Graphs read from graph6 lines (a file, standard input or an in-memory list)."""

    source = "graph6"
    contains_all_graphs = False

    def __init__(self, lines: Iterable[str], descriptor: str = "graph6 stream"):
        self._source = lines
        self._lines: Iterator[str] = iter(lines)
        self.descriptor = descriptor

    @classmethod
    def from_file(cls, path: str) -> "Graph6Population":
        if path == "-":
            return cls(sys.stdin, "stdin")
        try:
            handle = open(path, "r", encoding="ascii", errors="replace")
        except OSError as e:
            raise PopulationError(f"Cannot read graph6 file {path}: {e}")
        return cls(handle, path)

    def peek_order(self) -> Optional[int]:
        """Vertex count of the first decodable record, which stays in the stream."""
        seen: List[str] = []
        order = None
        for line in self._lines:
            seen.append(line)
            if not line.strip():
                continue
            try:
                order = graph_from_graph6(line).n
            except CliqueTensorException:
                continue
            break
        self._lines = chain(seen, self._lines)
        return order

    def chunk_count(self, chunk_size: int) -> Optional[int]:
        return None

    def tasks(self, chunk_size: int) -> Iterator[tuple]:
        lines = (line.strip() for line in self._lines)
        lines = (line for line in lines if line)
        try:
            while True:
                chunk = list(islice(lines, chunk_size))
                if not chunk:
                    return
                yield ("graph6", chunk)
        finally:
            if self._source is not sys.stdin and hasattr(self._source, "close"):
                self._source.close()


class ScanAccumulator:
    """Partial scan state; ``merge`` is associative and order independent."""

    def __init__(self, tie_tol: float):
        self.tie_tol = tie_tol
        self.scanned = 0
        self.skipped = 0
        self.free_count = 0
        self.best_rho = -math.inf
        self.candidates: Dict[str, Tuple[float, int]] = {}
        self.max_edges = 0
        self.max_cliques = 0
        self.unconverged = 0

    def threshold(self) -> float:
        return self.best_rho - self.tie_tol

    def offer(self, graph6: str, rho: float, clique_count: int) -> None:
        if rho < self.threshold():
            return
        self.candidates[graph6] = (rho, clique_count)
        if rho > self.best_rho:
            self.best_rho = rho
            floor = self.threshold()
            self.candidates = {g: v for g, v in self.candidates.items() if v[0] >= floor}

    def merge(self, other: "ScanAccumulator") -> None:
        self.scanned += other.scanned
        self.skipped += other.skipped
        self.free_count += other.free_count
        self.max_edges = max(self.max_edges, other.max_edges)
        self.max_cliques = max(self.max_cliques, other.max_cliques)
        self.unconverged += other.unconverged
        for graph6, (rho, count) in other.candidates.items():
            self.offer(graph6, rho, count)

    def maximizers(self) -> List[str]:
        floor = self.threshold()
        return sorted(g for g, (rho, _) in self.candidates.items() if rho >= floor)


class ScanWorker:
    """Per-process scanning state: solver, query and pruning floor."""

    def __init__(self, n: int, k: int, r: int, t: int, solver: SolverSettings, scan: ScanSettings, floor: float):
        self.n = n
        self.t = t
        self.r = r
        self.query = FreenessQuery(k, r)
        self.spectral = SpectralService(solver)
        self.tie_tol = scan.tie_tol
        self.prune = scan.prune
        self.floor = floor
        self.pruned = 0

    def process(self, graph: Graph, acc: ScanAccumulator) -> None:
        if graph.n != self.n:
            acc.skipped += 1
            return
        acc.scanned += 1
        blocking = enumerate_cliques(graph, self.r + 1)
        if not is_free(graph, self.query, blocking):
            return
        acc.free_count += 1
        acc.max_edges = max(acc.max_edges, graph.num_edges())
        cliques = blocking if self.t == self.r + 1 else enumerate_cliques(graph, self.t)
        acc.max_cliques = max(acc.max_cliques, cliques.count)

        if not cliques.count:
            acc.offer(graph_to_graph6(graph), 0.0, 0)
            return
        if self.prune:
            best = max(acc.best_rho, self.floor)
            if rho_upper_bound(graph, cliques) < best - self.tie_tol:
                self.pruned += 1
                return
        result = self.spectral.spectral_radius(graph, self.t, cliques)
        if not result.converged:
            acc.unconverged += 1
        acc.offer(graph_to_graph6(graph), result.rho, cliques.count)

    def run(self, task: tuple, acc: Optional[ScanAccumulator] = None) -> ScanAccumulator:
        acc = acc if acc is not None else ScanAccumulator(self.tie_tol)
        if task[0] == "masks":
            _, n, lo, hi = task
            for graph in enumerate_graphs(n, lo, hi):
                self.process(graph, acc)
        else:
            for line in task[1]:
                try:
                    graph = graph_from_graph6(line)
                except CliqueTensorException as e:
                    logger.warning(f"Skipping unreadable graph6 record {line!r}: {e.message}")
                    acc.skipped += 1
                    continue
                self.process(graph, acc)
        return acc


_worker: Optional[ScanWorker] = None


def _init_worker(args: tuple) -> None:
    global _worker
    _worker = ScanWorker(*args)


def _run_task(task: tuple) -> ScanAccumulator:
    return _worker.run(task)


class ScanService:
    """Runs maximizer scans and assembles ScanRecords."""

    def __init__(self, solver: Optional[SolverSettings] = None, scan: Optional[ScanSettings] = None):
        self.solver = solver or SolverSettings()
        self.settings = scan or ScanSettings()
        self.spectral = SpectralService(self.solver)

    def _summarize_conjectured(self, n: int, k: int, r: int, t: int) -> Tuple[Graph, ConjecturedSummary]:
        graph = conjectured_extremal(n, k, r)
        cliques = enumerate_cliques(graph, t)
        rho = self.spectral.rho(graph, t, cliques)
        summary = ConjecturedSummary(
            graph6=graph.to_graph6(),
            rho=rho,
            clique_count=cliques.count,
            edges=graph.num_edges(),
            free=is_free(graph, FreenessQuery(k, r)),
        )
        return graph, summary

    def _accumulate(self, population, worker_args: tuple) -> ScanAccumulator:
        chunk_size = self.settings.chunk_size
        tasks = population.tasks(chunk_size)
        progress = dict(
            total=population.chunk_count(chunk_size),
            disable=not self.settings.progress,
            file=sys.stderr,
            unit="chunk",
            desc="scan",
        )
        total = ScanAccumulator(self.settings.tie_tol)
        if self.settings.threads == 1:
            worker = ScanWorker(*worker_args)
            for task in tqdm(tasks, **progress):
                worker.run(task, total)
            logger.info(f"Pruned {worker.pruned} free graphs before power iteration")
            return total
        with multiprocessing.Pool(self.settings.threads, initializer=_init_worker, initargs=(worker_args,)) as pool:
            for partial in tqdm(pool.imap(_run_task, tasks), **progress):
                total.merge(partial)
        return total

    def scan(self, population, n: int, k: int, r: int, t: int) -> ScanRecord:
        """Find all ρ_t-maximizers among the kK_{r+1}-free graphs of ``population``.

        Args:
            population: EnumeratedPopulation or Graph6Population
            n: Vertex count; graph6 records of another order are skipped
            k: Number of disjoint cliques in the forbidden pattern
            r: The forbidden cliques have r + 1 vertices
            t: Clique order of the tensor, 2 <= t <= n

        Returns:
            ScanRecord with the maximizers in graph6, the verdict against
            K_{k-1} ∨ T_r(n-k+1) and the population counts

        Raises:
            ArgumentError: If t is out of range
        """
        if t < 2:
            raise ArgumentError(f"Clique order t must be at least 2, got {t}")
        if t > n:
            raise ArgumentError(f"Clique order t={t} exceeds n={n}")
        conjectured, summary = self._summarize_conjectured(n, k, r, t)
        floor = summary.rho if (population.contains_all_graphs and summary.free) else -math.inf

        logger.info(f"Scanning {population.descriptor} for (n={n}, k={k}, r={r}, t={t})")
        worker_args = (n, k, r, t, self.solver, self.settings, floor)
        acc = self._accumulate(population, worker_args)
        if acc.skipped:
            logger.warning(f"Skipped {acc.skipped} records with the wrong vertex count or bad encoding")
        if acc.unconverged:
            logger.warning(f"{acc.unconverged} graphs did not converge within {self.solver.max_iters} iterations")

        maximizers = acc.maximizers()
        best_rho = acc.best_rho if maximizers else None
        best_graph6 = None
        if maximizers:
            best_graph6 = min(g for g in maximizers if acc.candidates[g][0] == acc.best_rho)

        meets_bound = all(
            acc.candidates[g][0] >= t / n * acc.candidates[g][1] - CLIQUE_BOUND_SLACK for g in maximizers
        )

        if not summary.free:
            verdict = "conjectured-not-free"
        else:
            matches = [same_shape(graph_from_graph6(g), conjectured) for g in maximizers]
            if matches and all(matches):
                verdict = "unique-conjectured"
            elif any(matches):
                verdict = "conjectured-among-ties"
            else:
                verdict = "conjecture-beaten"
        logger.info(f"Scan verdict for n={n}: {verdict} (best rho {best_rho!r}, {len(maximizers)} maximizers)")

        return ScanRecord(
            params=ScanParams(
                n=n,
                k=k,
                r=r,
                t=t,
                tol=self.solver.tol,
                shift=self.solver.shift,
                max_iters=self.solver.max_iters,
                tie_tol=self.settings.tie_tol,
                prune=self.settings.prune,
            ),
            population=PopulationInfo(
                source=population.source,
                descriptor=population.descriptor,
                scanned=acc.scanned,
                skipped=acc.skipped,
            ),
            free_count=acc.free_count,
            best_rho=best_rho,
            best_graph6=best_graph6,
            maximizer_count=len(maximizers),
            maximizers=maximizers,
            conjectured=summary,
            verdict=verdict,
            max_edges=acc.max_edges,
            max_edges_by_conjectured=summary.free and summary.edges == acc.max_edges,
            max_cliques=acc.max_cliques,
            max_cliques_by_conjectured=summary.free and summary.clique_count == acc.max_cliques,
            maximizers_meet_clique_bound=meets_bound,
        )

    def scan_all(self, n: int, k: int, r: int, t: int) -> ScanRecord:
        """Scan every labelled graph on n vertices.

        Raises:
            CapacityError: If n exceeds the internal enumeration limit
        """
        return self.scan(EnumeratedPopulation(n), n, k, r, t)

    def thresholds(self, n_min: int, n_max: int, k: int, r: int, t: int) -> ThresholdTable:
        """Verdict per n over the internal enumeration.

        Args:
            n_min: First vertex count, inclusive
            n_max: Last vertex count, inclusive
            k: Number of disjoint cliques in the forbidden pattern
            r: The forbidden cliques have r + 1 vertices
            t: Clique order of the tensor

        Returns:
            ThresholdTable with one row per n
        """
        if n_min > n_max:
            raise ArgumentError(f"Empty n range {n_min}..{n_max}")
        rows = []
        for n in range(n_min, n_max + 1):
            record = self.scan_all(n, k, r, t)
            rows.append(
                ThresholdRow(
                    n=n,
                    verdict=record.verdict,
                    best_rho=record.best_rho,
                    conjectured_rho=record.conjectured.rho,
                    free_count=record.free_count,
                    maximizer_count=record.maximizer_count,
                )
            )
        threshold = None
        for row in reversed(rows):
            if row.verdict != "unique-conjectured":
                break
            threshold = row.n
        return ThresholdTable(k=k, r=r, t=t, rows=rows, threshold=threshold)

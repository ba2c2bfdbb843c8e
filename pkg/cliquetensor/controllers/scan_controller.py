"""
Scan commands: scan and thresholds.
"""
import argparse
import csv
from pathlib import Path

from cliquetensor.controllers.base import BaseController, CommandResult, format_float
from cliquetensor.core.dependencies import ServiceContainer
from cliquetensor.core.exceptions import PopulationError
from cliquetensor.core.logging import get_logger
from cliquetensor.schemas.scan import ScanRecord
from cliquetensor.services.scan_service import Graph6Population

logger = get_logger(__name__)

CSV_COLUMNS = [
    "n", "k", "r", "t", "source", "scanned", "skipped", "free_count", "best_rho", "maximizer_count",
    "verdict", "conjectured_rho", "max_edges", "max_cliques", "maximizers_meet_clique_bound",
]


def write_scan_csv(record: ScanRecord, path: str) -> None:
    """Write a header plus one summary row for ``record``."""
    row = {
        "n": record.params.n,
        "k": record.params.k,
        "r": record.params.r,
        "t": record.params.t,
        "source": record.population.source,
        "scanned": record.population.scanned,
        "skipped": record.population.skipped,
        "free_count": record.free_count,
        "best_rho": "" if record.best_rho is None else format_float(record.best_rho),
        "maximizer_count": record.maximizer_count,
        "verdict": record.verdict,
        "conjectured_rho": format_float(record.conjectured.rho),
        "max_edges": record.max_edges,
        "max_cliques": record.max_cliques,
        "maximizers_meet_clique_bound": record.maximizers_meet_clique_bound,
    }
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerow(row)
    logger.info(f"Scan summary written to {path}")


def scan(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """Exhaustive maximizer scan over all graphs on N vertices or a graph6 file."""
    service = container.scan_service
    if args.all_n is not None:
        record = service.scan_all(args.all_n, args.k, args.r, args.t)
    else:
        population = Graph6Population.from_file(args.g6)
        n = args.n if args.n is not None else population.peek_order()
        if n is None:
            raise PopulationError(f"No decodable graph6 record in {population.descriptor}")
        record = service.scan(population, n, args.k, args.r, args.t)
    csv_path = args.csv or container.config.output.csv_path
    if csv_path:
        write_scan_csv(record, csv_path)
    return BaseController.create_success_response(record)


def thresholds(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """Verdict per n and the first n from which the conjectured graph is the unique maximizer."""
    table = container.scan_service.thresholds(args.n_min, args.n_max, args.k, args.r, args.t)
    return BaseController.create_success_response(table)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """Add the scan commands to the top-level parser."""
    parser = subparsers.add_parser("scan", parents=[common], help="exhaustive rho_t maximizer scan")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--all-n", type=int, metavar="N", help="every labelled graph on N vertices (N <= 7)")
    source.add_argument("--g6", metavar="FILE", help="graph6 file, one graph per line (- for standard input)")
    parser.add_argument("--n", type=int, help="vertex count of the --g6 graphs (default: that of the first record)")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--t", type=int, required=True)
    parser.add_argument("--csv", metavar="FILE", help="also write a CSV summary row")
    parser.set_defaults(handler=scan)

    parser = subparsers.add_parser("thresholds", parents=[common], help="verdict table over a range of n")
    parser.add_argument("--n-min", type=int, required=True)
    parser.add_argument("--n-max", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--t", type=int, required=True)
    parser.set_defaults(handler=thresholds)

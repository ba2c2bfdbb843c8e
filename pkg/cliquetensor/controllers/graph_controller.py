"""
Graph commands: rho, cliques, free and construct.
"""
import argparse
from typing import Any, Dict

from cliquetensor.controllers.base import BaseController, CommandResult
from cliquetensor.core.dependencies import ServiceContainer
from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.graph import Graph
from cliquetensor.models.packing import FreenessQuery
from cliquetensor.schemas.reports import CliqueReport, FreenessReport
from cliquetensor.services.clique_service import clique_connected, enumerate_cliques, is_clique_regular
from cliquetensor.services.packing_service import find_disjoint_packing
from cliquetensor.services.spectral_service import normalize_max
from cliquetensor.utils.validators import CONSTRUCT_KINDS, construct_graph, parse_construct_spec, read_graph_argument

logger = get_logger(__name__)


def _graph_from_args(args: argparse.Namespace) -> Graph:
    construct = getattr(args, "construct", None)
    if construct is not None and args.graph is not None:
        raise ArgumentError("Give either a graph6 argument or --construct, not both")
    if construct is not None:
        return parse_construct_spec(construct)
    if args.graph is None:
        raise ArgumentError("A graph6 argument (or - for standard input) is required")
    return read_graph_argument(args.graph)


def rho(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """
    ρ_t(G) with Perron vectors and diagnostics.

    With --max-normalized the winning Perron vector rescaled to max entry 1 is
    appended to the document.
    """
    graph = _graph_from_args(args)
    result = container.spectral_service.spectral_radius(graph, args.t)
    if not result.converged:
        logger.warning(f"Power iteration did not converge within {result.tol} on every component")
    if not args.max_normalized:
        return BaseController.create_success_response(result)
    document: Dict[str, Any] = result.model_dump(mode="json")
    document["max_normalized_vector"] = normalize_max(result.perron_vector())
    return BaseController.create_success_response(document)


def cliques(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """c_t(G), per-vertex counts and, with --list, the cliques themselves."""
    graph = read_graph_argument(args.graph)
    found = enumerate_cliques(graph, args.t)
    report = CliqueReport(
        graph6=graph.to_graph6(),
        n=graph.n,
        t=args.t,
        count=found.count,
        vertex_counts=found.vertex_counts(),
        clique_regular=is_clique_regular(graph, args.t, found) if args.t >= 2 else True,
        clique_connected=clique_connected(graph, args.t, found) if args.t >= 2 else graph.n > 0,
        cliques=[list(c) for c in found.tuples] if args.list else None,
    )
    return BaseController.create_success_response(report)


def free(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """Is G kK_{r+1}-free? With --witness the packing found otherwise."""
    graph = read_graph_argument(args.graph)
    query = FreenessQuery(args.k, args.r)
    packing = find_disjoint_packing(graph, query)
    report = FreenessReport(
        graph6=graph.to_graph6(),
        k=args.k,
        r=args.r,
        free=packing is None,
        witness=packing.vertex_lists() if (args.witness and packing is not None) else None,
    )
    return BaseController.create_success_response(report)


def construct(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """graph6 of a named construction."""
    graph = construct_graph(args.kind, args.values)
    return BaseController.create_success_response(graph.to_graph6())


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """Add the graph commands to the top-level parser."""
    parser = subparsers.add_parser("rho", parents=[common], help="t-clique spectral radius")
    parser.add_argument("graph", nargs="?", help="graph6 string, or - for standard input")
    parser.add_argument("--construct", metavar="SPEC", help='named graph, e.g. "turan 6 3"')
    parser.add_argument("--t", type=int, required=True, help="clique order")
    parser.add_argument("--max-normalized", action="store_true", help="also report the vector scaled to max entry 1")
    parser.set_defaults(handler=rho)

    parser = subparsers.add_parser("cliques", parents=[common], help="count or list t-cliques")
    parser.add_argument("graph", help="graph6 string, or - for standard input")
    parser.add_argument("--t", type=int, required=True, help="clique order")
    parser.add_argument("--list", action="store_true", help="include the cliques")
    parser.set_defaults(handler=cliques)

    parser = subparsers.add_parser("free", parents=[common], help="kK_{r+1}-freeness")
    parser.add_argument("graph", help="graph6 string, or - for standard input")
    parser.add_argument("--k", type=int, required=True, help="number of disjoint cliques")
    parser.add_argument("--r", type=int, required=True, help="cliques have r+1 vertices")
    parser.add_argument("--witness", action="store_true", help="include the packing when not free")
    parser.set_defaults(handler=free)

    parser = subparsers.add_parser("construct", parents=[common], help="graph6 of a named graph")
    parser.add_argument("kind", choices=CONSTRUCT_KINDS)
    parser.add_argument("values", nargs="+", help="N R | N K R | S1,S2,... | N")
    parser.set_defaults(handler=construct)

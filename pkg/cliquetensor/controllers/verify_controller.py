"""
Verification commands. Each prints its report and exits 0 iff the check passed.
"""
import argparse
import json
from pathlib import Path

from pydantic import ValidationError

from cliquetensor.controllers.base import BaseController, CommandResult
from cliquetensor.core.dependencies import ServiceContainer
from cliquetensor.core.exceptions import ArgumentError, PopulationError
from cliquetensor.schemas.scan import ScanRecord
from cliquetensor.utils.validators import parse_int, parse_parts, read_graph_argument


def lower_bound(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    report = container.verification_service.check_lower_bound(args.n, args.k, args.r, args.t)
    return BaseController.require_pass(report, report.passed, "lower-bound")


def balancing(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    service = container.verification_service
    if args.grid:
        report = service.balancing_grid(max_total=args.max_total)
        return BaseController.require_pass(report, report.passed, "balancing grid")
    if any(value is None for value in (args.k, args.t, args.parts, args.i, args.j)):
        raise ArgumentError("balancing needs K T S1,S2,... I J, or --grid")
    report = service.verify_balancing(
        parse_int(args.k, "K", minimum=1),
        parse_int(args.t, "T", minimum=2),
        parse_parts(args.parts),
        parse_int(args.i, "I", minimum=0),
        parse_int(args.j, "J", minimum=0),
    )
    return BaseController.require_pass(report, report.increased, "balancing")


def monotonicity(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """Single pair; a pair outside the hypotheses is reported as not applicable and passes."""
    service = container.verification_service
    if args.random is not None:
        if args.n is None:
            raise ArgumentError("--random needs --n")
        report = service.monotonicity_batch(args.random, args.n, args.t, seed=args.seed)
        return BaseController.require_pass(report, report.passed, "monotonicity batch")
    if any(value is None for value in (args.graph, args.u, args.v)):
        raise ArgumentError("monotonicity needs G6 U V, or --random COUNT")
    graph = read_graph_argument(args.graph)
    report = service.verify_monotonicity(
        graph, parse_int(args.u, "U", minimum=0), parse_int(args.v, "V", minimum=0), args.t
    )
    return BaseController.require_pass(report, not report.applicable or bool(report.strict), "monotonicity")


def connectivity_equiv(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    report = container.verification_service.connectivity_equivalence(args.max_n)
    return BaseController.require_pass(report, report.passed, "connectivity-equiv")


def chvatal_hanson(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    report = container.verification_service.chvatal_hanson(args.max_m, args.max_delta)
    return BaseController.require_pass(report, report.passed, "chvatal-hanson")


def augmentation(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    graph = read_graph_argument(args.graph)
    report = container.verification_service.verify_augmentation(graph, args.k, args.r, args.t)
    passed = not report.applicable or bool(report.still_free and report.increased)
    return BaseController.require_pass(report, passed, "augmentation")


def maximizers(args: argparse.Namespace, container: ServiceContainer) -> CommandResult:
    """Connectivity of the maximizers stored in a ScanRecord JSON file."""
    path = Path(args.record)
    try:
        record = ScanRecord.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except OSError as e:
        raise PopulationError(f"Cannot read scan record {path}: {e}")
    except (ValueError, ValidationError) as e:
        raise ArgumentError(f"{path} is not a scan record: {e}")
    report = container.verification_service.maximizer_connectivity_check(record, args.t)
    return BaseController.require_pass(report, report.passed, "maximizers")


def register(subparsers, common: argparse.ArgumentParser) -> None:
    """Add ``verify <check>`` to the top-level parser."""
    verify = subparsers.add_parser("verify", help="numerical property checks")
    checks = verify.add_subparsers(dest="check", metavar="CHECK", required=True)

    parser = checks.add_parser("lower-bound", parents=[common], help="rho_t >= (t/n) c_t on the conjectured graph")
    for name in ("n", "k", "r", "t"):
        parser.add_argument(name, type=int, metavar=name.upper())
    parser.set_defaults(handler=lower_bound)

    parser = checks.add_parser("balancing", parents=[common], help="moving a vertex to a smaller part raises rho_t")
    parser.add_argument("k", nargs="?", metavar="K")
    parser.add_argument("t", nargs="?", metavar="T")
    parser.add_argument("parts", nargs="?", metavar="S1,S2,...")
    parser.add_argument("i", nargs="?", metavar="I")
    parser.add_argument("j", nargs="?", metavar="J")
    parser.add_argument("--grid", action="store_true", help="k in {2,3}, r in {2,3}, every t <= r and part vector")
    parser.add_argument("--max-total", type=int, default=12, help="largest part sum on the grid")
    parser.set_defaults(handler=balancing)

    parser = checks.add_parser("monotonicity", parents=[common], help="adding an edge strictly raises rho_t")
    parser.add_argument("graph", nargs="?", metavar="G6")
    parser.add_argument("u", nargs="?", metavar="U")
    parser.add_argument("v", nargs="?", metavar="V")
    parser.add_argument("--t", type=int, required=True)
    parser.add_argument("--random", type=int, metavar="COUNT", help="check COUNT random applicable pairs")
    parser.add_argument("--n", type=int, help="vertex count for --random")
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=monotonicity)

    parser = checks.add_parser(
        "connectivity-equiv", parents=[common], help="weak irreducibility equals t-clique connectivity"
    )
    parser.add_argument("--max-n", type=int, default=6)
    parser.set_defaults(handler=connectivity_equiv)

    parser = checks.add_parser("chvatal-hanson", parents=[common], help="max edges with bounded matching and degree")
    parser.add_argument("--max-m", type=int, default=50)
    parser.add_argument("--max-delta", type=int, default=50)
    parser.set_defaults(handler=chvatal_hanson)

    parser = checks.add_parser("augmentation", parents=[common], help="connect a vertex to the winning component")
    parser.add_argument("graph", metavar="G6")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--t", type=int, required=True)
    parser.set_defaults(handler=augmentation)

    parser = checks.add_parser("maximizers", parents=[common], help="maximizers of a scan are t-clique connected")
    parser.add_argument("record", metavar="RECORD.json")
    parser.add_argument("--t", type=int, help="clique order (default: that of the scan)")
    parser.set_defaults(handler=maximizers)

"""
Command-line application for cliquetensor.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from cliquetensor.controllers import graph_controller, scan_controller, verify_controller
from cliquetensor.controllers.base import BaseController, CommandResult
from cliquetensor.core.config import LoggingSettings, OutputSettings, RunConfig, ScanSettings, SolverSettings, settings
from cliquetensor.core.dependencies import ServiceContainer
from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.core.logging import get_logger, setup_logging
from cliquetensor.middleware.timing import TimingMiddleware

logger = get_logger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises ArgumentError instead of exiting."""

    def error(self, message: str):
        raise ArgumentError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    solver = common.add_argument_group("solver")
    solver.add_argument("--tol", type=float, help=f"gap tolerance (default {settings.solver.tol})")
    solver.add_argument("--max-iters", type=int, help=f"iteration cap (default {settings.solver.max_iters})")
    solver.add_argument("--shift", type=float, help=f"diagonal shift (default {settings.solver.shift})")

    scan = common.add_argument_group("scan")
    scan.add_argument("--tie-tol", type=float, help=f"maximizer tie tolerance (default {settings.scan.tie_tol})")
    scan.add_argument("--threads", type=int, help="worker processes (default 1)")
    scan.add_argument("--chunk-size", type=int, help=f"graphs per work unit (default {settings.scan.chunk_size})")
    scan.add_argument("--no-prune", action="store_true", help="run the solver on every free graph")
    scan.add_argument("--progress", action="store_true", help="progress bar on standard error")

    output = common.add_argument_group("output")
    output.add_argument("--output", "-o", metavar="FILE", help="write the document to FILE instead of standard output")
    output.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="default WARNING")
    output.add_argument("--log-file", metavar="FILE")
    output.add_argument("-v", "--verbose", action="store_true", help="same as --log-level INFO")
    return common


def create_parser() -> CliParser:
    """Create the command-line parser with every command registered."""
    parser = CliParser(
        prog=settings.app_name,
        description=settings.app_description,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    common = _common_options()
    graph_controller.register(subparsers, common)
    scan_controller.register(subparsers, common)
    verify_controller.register(subparsers, common)
    return parser


def _given(**values) -> dict:
    return {key: value for key, value in values.items() if value is not None}


def build_config(args: argparse.Namespace) -> RunConfig:
    """RunConfig from the default settings overridden by command-line flags."""
    def option(name: str):
        return getattr(args, name, None)

    level = option("log_level") or ("INFO" if option("verbose") else None)
    try:
        return RunConfig(
            solver=SolverSettings(**_given(tol=option("tol"), max_iters=option("max_iters"), shift=option("shift"))),
            scan=ScanSettings(
                **_given(
                    tie_tol=option("tie_tol"),
                    threads=option("threads"),
                    chunk_size=option("chunk_size"),
                    prune=False if option("no_prune") else None,
                    progress=True if option("progress") else None,
                )
            ),
            output=OutputSettings(**_given(path=option("output"), csv_path=option("csv"))),
            logging=LoggingSettings(**_given(level=level, file=option("log_file"))),
        )
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ArgumentError(f"Invalid option: {problems}")


def dispatch(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse ``argv``, run the command and return its exit code and documents."""
    command = "parse"
    output = None
    try:
        args = create_parser().parse_args(argv)
        command = args.command if args.command != "verify" else f"verify {args.check}"
        config = build_config(args)
        output = config.output.path
        setup_logging(log_level=config.logging.level, log_file=config.logging.file)
        container = ServiceContainer(config)
        result = TimingMiddleware().dispatch(command, lambda: args.handler(args, container))
        return result._replace(output=output)
    except Exception as e:
        return BaseController.handle_exception(e, command)._replace(output=output)


def write_document(result: CommandResult) -> None:
    """Send the result's documents to their destinations."""
    if result.document is not None:
        text = BaseController.render(result.document)
        if result.output:
            target = Path(result.output)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text + "\n", encoding="utf-8")
            logger.info(f"Output written to {result.output}")
        else:
            sys.stdout.write(text + "\n")
    if result.error is not None:
        sys.stderr.write(BaseController.render(result.error) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    result = dispatch(argv)
    write_document(result)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

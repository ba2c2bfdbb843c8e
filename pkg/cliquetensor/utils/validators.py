"""
Argument validators for the command line.
"""
import sys
from typing import List, Optional, Sequence, TextIO

from cliquetensor.core.exceptions import ArgumentError
from cliquetensor.core.logging import get_logger
from cliquetensor.models.graph import Graph
from cliquetensor.services.graph_service import complete_graph, complete_multipartite, join_turan, turan_graph
from cliquetensor.utils.graph6 import graph_from_graph6

logger = get_logger(__name__)

CONSTRUCT_KINDS = ("complete", "turan", "join-turan", "multipartite")


def parse_int(text: str, name: str, minimum: Optional[int] = None) -> int:
    """
    Parse an integer argument.

    Args:
        text: Raw argument
        name: Argument name for error messages
        minimum: Optional inclusive lower bound

    Returns:
        The parsed integer
    """
    try:
        value = int(text)
    except ValueError:
        raise ArgumentError(f"{name} must be an integer, got {text!r}")
    if minimum is not None and value < minimum:
        raise ArgumentError(f"{name} must be at least {minimum}, got {value}")
    return value


def parse_parts(text: str) -> List[int]:
    """Parse a comma separated list of part sizes, e.g. ``3,3,2``."""
    pieces = [p.strip() for p in text.split(",") if p.strip()]
    if not pieces:
        raise ArgumentError("Empty part list")
    return [parse_int(p, "part size", minimum=0) for p in pieces]


def construct_graph(kind: str, values: Sequence[str]) -> Graph:
    """Build one of the named graphs from its kind and parameters."""
    expected = {"complete": 1, "turan": 2, "join-turan": 3, "multipartite": 1}
    if kind not in expected:
        raise ArgumentError(f"Unknown construction {kind!r}; expected one of {', '.join(CONSTRUCT_KINDS)}")
    if len(values) != expected[kind]:
        raise ArgumentError(f"Construction {kind!r} takes {expected[kind]} argument(s), got {len(values)}")

    if kind == "multipartite":
        return complete_multipartite(parse_parts(values[0]))
    numbers = [parse_int(v, f"{kind} parameter", minimum=0) for v in values]
    if kind == "complete":
        return complete_graph(numbers[0])
    if kind == "turan":
        n, r = numbers
        return turan_graph(n, r)
    n, k, r = numbers
    return join_turan(n, k, r)


def parse_construct_spec(spec: str) -> Graph:
    """Parse ``"turan 6 3"``-style construction specs."""
    words = spec.split()
    if not words:
        raise ArgumentError("Empty construction spec")
    return construct_graph(words[0], words[1:])


def read_graph_argument(text: str, stdin: Optional[TextIO] = None) -> Graph:
    """Decode a graph6 argument; ``-`` reads the first non-blank line of standard input."""
    if text == "-":
        stream = stdin or sys.stdin
        for line in stream:
            if line.strip():
                logger.debug("Read graph from standard input")
                return graph_from_graph6(line)
        raise ArgumentError("No graph6 line on standard input")
    return graph_from_graph6(text)

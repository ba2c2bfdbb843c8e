"""
graph6 codec for graphs with at most 64 vertices.

Layout: a size header (one byte ``n + 63`` for n <= 62, otherwise ``~``
followed by three 6-bit bytes), then the upper triangle of the adjacency
matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits
per byte, big-endian, each byte offset by 63 and zero padded.
"""
from typing import List, Tuple

from cliquetensor.core.exceptions import CapacityError, Graph6ParseError
from cliquetensor.models.graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"
_MIN_CHAR = 63
_MAX_CHAR = 126


def strip_graph6_header(text: str) -> Tuple[str, int]:
    """Remove surrounding whitespace and the optional ``>>graph6<<`` header.

    Returns the body and the offset of the body within the stripped line.
    """
    s = text.strip()
    if s.startswith(HEADER):
        return s[len(HEADER):], len(HEADER)
    return s, 0


def _decode_size(data: bytes, base: int) -> Tuple[int, int]:
    if not data:
        raise Graph6ParseError("Empty graph6 string", offset=base)
    first = data[0]
    if first < _MIN_CHAR or first > _MAX_CHAR:
        raise Graph6ParseError(f"Invalid header byte {first!r}", offset=base)
    if first != _MAX_CHAR:
        return first - _MIN_CHAR, 1
    if len(data) >= 2 and data[1] == _MAX_CHAR:
        raise CapacityError(f"graph6 long-form header encodes more than {MAX_VERTICES} vertices")
    if len(data) < 4:
        raise Graph6ParseError("Truncated size header", offset=base + len(data))
    n = 0
    for i in range(1, 4):
        c = data[i]
        if c < _MIN_CHAR or c > _MAX_CHAR:
            raise Graph6ParseError(f"Invalid header byte {c!r}", offset=base + i)
        n = (n << 6) | (c - _MIN_CHAR)
    return n, 4


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + _MIN_CHAR)
    return "~" + "".join(chr(((n >> shift) & 0x3F) + _MIN_CHAR) for shift in (12, 6, 0))


def graph_from_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    body, base = strip_graph6_header(text)
    try:
        data = body.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError("Non-ASCII character", offset=base + e.start)

    n, pos = _decode_size(data, base)
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 encodes {n} vertices; at most {MAX_VERTICES} are supported")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise Graph6ParseError(
            f"Truncated payload: expected {nbytes} bytes, found {len(payload)}",
            offset=base + len(data),
        )
    if len(payload) > nbytes:
        raise Graph6ParseError("Unexpected trailing bytes", offset=base + pos + nbytes)

    bits = 0
    for i, c in enumerate(payload):
        if c < _MIN_CHAR or c > _MAX_CHAR:
            raise Graph6ParseError(f"Out-of-range character {chr(c)!r}", offset=base + pos + i)
        bits = (bits << 6) | (c - _MIN_CHAR)
    pad = nbytes * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6ParseError("Non-zero padding bits", offset=base + pos + nbytes - 1)
    bits >>= pad

    adj = [0] * n
    edges = 0
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edges += 1
            k -= 1
    return Graph._trusted(n, tuple(adj), edges)


def graph_to_graph6(graph: Graph) -> str:
    """Encode a Graph as a graph6 line (without header or newline)."""
    n = graph.n
    adj = graph.adj
    out: List[str] = [_encode_size(n)]
    acc = 0
    filled = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + _MIN_CHAR))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + _MIN_CHAR))
    return "".join(out)

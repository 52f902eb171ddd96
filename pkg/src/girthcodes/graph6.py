"""graph6 encoding and decoding (short and medium length headers only)."""

from __future__ import annotations

from collections.abc import Iterator

from .errors import GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 258047


def _size_chars(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))
    raise ValueError(f"graph6 long form (n > {MAX_ORDER}) is not supported")


def encode_graph6(g: Graph, header: bool = False) -> str:
    """Canonical graph6 line for ``g`` (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        nj = g.adj[j]
        bits.extend(1 if i in nj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(63 + value))
    return (HEADER if header else "") + _size_chars(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header and trailing newline are accepted."""
    line = text.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER) :]
    if not line:
        raise GraphFormatError("empty graph6 line", 0)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", pos)

    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    elif len(line) > 1 and line[1] == "~":
        raise GraphFormatError("long-form length header is not supported", 0)
    else:
        if len(line) < 4:
            raise GraphFormatError("truncated length header", len(line))
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise GraphFormatError("non-canonical length header", 0)
        pos = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < nchars:
        raise GraphFormatError(f"expected {nchars} data bytes, found {len(body)}", len(line))
    if len(body) > nchars:
        raise GraphFormatError("trailing garbage after graph data", pos + nchars)

    values = [ord(ch) - 63 for ch in body]
    pad = nchars * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", pos + nchars - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (values[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6(text: str) -> Iterator[Graph]:
    """Yield one graph per non-blank line."""
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line.strip())

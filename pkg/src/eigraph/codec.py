"""graph6 and edge-list text formats.

graph6 layout (n <= 62): one size byte chr(n+63), then the upper-triangle
bits in column order (1,2),(1,3),(2,3),(1,4),... packed big-endian into
6-bit groups, zero-padded, each group emitted as chr(value+63).  Every byte
of a valid string lies in [63, 126].

Edge-list layout: a header line "n <count>", then one "i j" line per edge
with 1-based endpoints; '#' starts a comment anywhere on a line.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidVertex, MalformedGraph6, ParseError, SelfLoop
from .graphs import Graph, build_graph

GRAPH6_MAX_N = 62


def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise MalformedGraph6(f"graph6 single-byte size supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for idx in range(g.n * (g.n - 1) // 2):
        group = (group << 1) | ((g.bits >> idx) & 1)
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group = 0
            filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise MalformedGraph6("empty graph6 string")
    for ch in text:
        if not (63 <= ord(ch) <= 126):
            raise MalformedGraph6(f"byte {ord(ch)} outside graph6 range [63,126]")
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise MalformedGraph6(f"size byte implies n={n} > {GRAPH6_MAX_N} (multi-byte sizes unsupported)")
    npairs = n * (n - 1) // 2
    body = text[1:]
    if len(body) != (npairs + 5) // 6:
        raise MalformedGraph6(f"expected {(npairs + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = 0
    pos = 0
    for ch in body:
        group = ord(ch) - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (group >> shift) & 1
            if pos < npairs:
                bits |= bit << pos
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
            pos += 1
    return Graph(n=n, bits=bits)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream with one graph6 value per non-blank line."""
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def _strip(line: str) -> str:
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return line.strip()


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {raw.strip()!r}", line_no)
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"vertex count {fields[1]!r} is not an integer", line_no) from None
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", line_no)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'i j', got {raw.strip()!r}", line_no)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {raw.strip()!r}", line_no) from None
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i} (line {line_no})")
        if not (1 <= i <= n) or not (1 <= j <= n):
            raise InvalidVertex(f"edge ({i},{j}) outside 1..{n} (line {line_no})")
        edges.append((i, j))
    if n is None:
        raise ParseError("missing 'n <count>' header", 1)
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{i} {j}" for i, j in sorted(g.edges())]
    return "\n".join(lines) + "\n"

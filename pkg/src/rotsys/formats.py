"""Text formats: rotation files and graph6.

A rotation file is a header line ``n m`` followed by exactly n lines
``v: u1 u2 ... ud`` giving vertex v's clockwise neighbor order; ``#``
starts a comment line and tokens are whitespace-separated.  graph6 is the
usual 6-bit upper-triangle encoding with byte offset 63 for abstract
graph input.
"""

from .embedmap import EmbeddedGraph, build_embedding
from .errors import (
    BadVertexId,
    DuplicateNeighbor,
    LoopEdge,
    ParseError,
)
from .graphs import SimpleGraph


def _as_text(data) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data


def _content_lines(text: str):
    """(line_number, tokens) for every non-blank, non-comment line."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield ln, stripped.split()


def parse_rotation_file(data) -> EmbeddedGraph:
    """Parse a rotation file into a validated embedding.

    Syntax problems raise ParseError with the 1-based line number; when
    the input ends early the error points at the last line of the file.
    Per-line semantic problems (loops, repeated neighbors, bad ids) keep
    their specific error class with the line prefixed to the message.
    """
    text = _as_text(data)
    lines = list(_content_lines(text))
    last_line = len(text.splitlines())
    if not lines:
        raise ParseError("empty rotation file", line=max(last_line, 1))

    header_ln, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"expected header 'n m', got {' '.join(header)!r}", line=header_ln)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"non-integer header {' '.join(header)!r}", line=header_ln) from None
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be non-negative", line=header_ln)

    rotations = {}
    line_of = {}
    for ln, tokens in lines[1:]:
        if len(rotations) == n:
            raise ParseError(f"unexpected extra line after {n} rotation lines", line=ln)
        label = tokens[0]
        if not label.endswith(":") or not label[:-1].isdigit():
            raise ParseError(f"expected a vertex label 'v:', got {label!r}", line=ln)
        v = int(label[:-1])
        if not 0 <= v < n:
            raise BadVertexId(f"line {ln}: vertex label {v} outside 0..{n - 1}")
        if v in rotations:
            raise ParseError(f"vertex {v} already defined on line {line_of[v]}", line=ln)
        nbrs = []
        for tok in tokens[1:]:
            if not tok.isdigit():
                raise ParseError(f"non-integer neighbor {tok!r}", line=ln)
            u = int(tok)
            if not 0 <= u < n:
                raise BadVertexId(f"line {ln}: neighbor {u} outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"line {ln}: vertex {v} lists itself")
            if u in nbrs:
                raise DuplicateNeighbor(f"line {ln}: vertex {v} lists neighbor {u} twice")
            nbrs.append(u)
        rotations[v] = tuple(nbrs)
        line_of[v] = ln

    if len(rotations) < n:
        missing = min(set(range(n)) - set(rotations))
        raise ParseError(
            f"missing rotation line for vertex {missing}", line=max(last_line, 1)
        )
    degree_sum = sum(len(r) for r in rotations.values())
    if degree_sum != 2 * m:
        raise ParseError(
            f"degree sum {degree_sum} does not match 2m = {2 * m}", line=header_ln
        )
    return build_embedding(n, rotations)


def serialize_rotation_file(g: EmbeddedGraph) -> str:
    """Serialize an embedding; parse_rotation_file inverts this exactly."""
    out = [f"{g.n} {g.edge_count}"]
    for v, rot in enumerate(g.rotations):
        out.append(f"{v}: " + " ".join(map(str, rot)))
    return "\n".join(out) + "\n"


def parse_graph6(data) -> SimpleGraph:
    """Parse one graph6-encoded graph (short or 3-byte long form)."""
    text = _as_text(data).strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ParseError("empty graph6 input")
    if any(ch.isspace() for ch in text):
        raise ParseError("graph6 input must be a single token")
    values = []
    for ch in text:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
        values.append(o - 63)

    if values[0] < 63:
        n = values[0]
        body = values[1:]
    elif len(values) >= 4 and values[1] < 63:
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        body = values[4:]
    else:
        raise ParseError("graph6 inputs beyond 258047 vertices are not supported")

    if n == 0:
        raise ParseError("graph6 input encodes a graph with no vertices")
    bits_needed = n * (n - 1) // 2
    bytes_needed = (bits_needed + 5) // 6
    if len(body) != bytes_needed:
        raise ParseError(
            f"graph6 body has {len(body)} characters, expected {bytes_needed} for n={n}"
        )
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            if body[b // 6] >> (5 - b % 6) & 1:
                edges.append((i, j))
            b += 1
    return SimpleGraph.from_edges(n, edges)

"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

from pathlib import Path

from statuspairs.graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in range(30, -1, -6)])


def to_graph6_bytes(g: Graph) -> bytes:
    """Encode ``g`` as graph6 (no header, no newline)."""
    masks = g.masks
    bits = []
    for j in range(1, g.n):
        row = masks[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    data = bytearray()
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        data.append(value + 63)
    return _encode_order(g.n) + bytes(data)


def to_graph6(g: Graph) -> str:
    return to_graph6_bytes(g).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string; a leading ``>>graph6<<`` header is accepted."""
    if isinstance(text, str):
        try:
            raw = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphError("graph6 data must be ASCII") from exc
    else:
        raw = text.strip()
    if raw.startswith(GRAPH6_HEADER.encode()):
        raw = raw[len(GRAPH6_HEADER) :]
    if not raw:
        raise GraphError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in raw):
        raise GraphError("graph6 byte out of range 63..126")
    values = [c - 63 for c in raw]
    if values[0] != 63:
        n, body = values[0], values[1:]
    elif len(values) >= 4 and values[1] != 63:
        n = values[1] << 12 | values[2] << 6 | values[3]
        body = values[4:]
    elif len(values) >= 8:
        n = 0
        for v in values[2:8]:
            n = n << 6 | v
        body = values[8:]
    else:
        raise GraphError("truncated graph6 order field")
    if n < 1:
        raise GraphError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, tuple(masks))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty edge list")
    try:
        header = [int(t) for t in lines[0]]
        pairs = [tuple(int(t) for t in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from exc
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"edge list declares {m} edges but has {len(pairs)}")
    if any(len(p) != 2 for p in pairs):
        raise GraphError("each edge line must hold exactly two indices")
    g = Graph.from_edges(n, pairs)
    if g.m != m:
        raise GraphError("edge list contains duplicate edges")
    return g


def parse_graph(text: str) -> Graph:
    """Parse either format, deciding by the shape of the first line."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    tokens = first.split()
    if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
        return from_edge_list(text)
    if len(tokens) != 1:
        raise GraphError("unrecognised graph format")
    return from_graph6(tokens[0])


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="ascii", errors="replace"))

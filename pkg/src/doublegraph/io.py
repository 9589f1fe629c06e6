"""Text formats: the ``p q`` edge-list format (ELT v1), graph6 import and DOT export.

ELT v1 layout::

    # comment lines and blank lines are ignored
    p q
    u v      (q lines, 0 <= u, v < p)

The emitter writes pairs as ``u < v`` in ascending lexicographic order, so
``emit_elt`` is byte-for-byte deterministic.
"""

from __future__ import annotations

from pathlib import Path

from doublegraph.graph import Graph, GraphError, graph_from_edge_list


class ParseError(ValueError):
    pass


def parse_elt(text: str) -> Graph:
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        rows.append(parts)
    if not rows:
        raise ParseError("missing 'p q' header")
    try:
        nums = [(int(a), int(b)) for a, b in rows]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    (p, q), pairs = nums[0], nums[1:]
    if p < 0 or q < 0:
        raise ParseError(f"negative header values {p} {q}")
    if len(pairs) != q:
        raise ParseError(f"header announces {q} edges, found {len(pairs)}")
    try:
        return graph_from_edge_list(p, pairs)
    except GraphError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from None


def emit_elt(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(data: str | bytes) -> Graph:
    """Decode one graph6 record (optionally prefixed by ``>>graph6<<``)."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    s = data.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x < 64 for x in vals):
        raise ParseError("graph6 byte outside printable range 63..126")
    if vals[0] < 63:
        p, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        p = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        p = 0
        for x in vals[2:8]:
            p = (p << 6) | x
        body = vals[8:]
    else:
        raise ParseError("truncated graph6 size header")
    nbits = p * (p - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = [(x >> (5 - k)) & 1 for x in body for k in range(6)]
    edges = []
    k = 0
    for j in range(1, p):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return graph_from_edge_list(p, edges)


def emit_dot(g: Graph, name: str = "G", layers: int | None = None) -> str:
    """Undirected DOT text; with ``layers`` set, vertices are grouped per layer."""
    out = [f"graph {name} {{"]
    if layers and g.p % layers == 0:
        base = g.p // layers
        for i in range(layers):
            out.append(f"  subgraph cluster_{i} {{")
            out.append(f'    label="layer {i}";')
            for u in range(base):
                out.append(f'    {i * base + u} [label="({u},{i})"];')
            out.append("  }")
    else:
        out.extend(f"  {u};" for u in range(g.p))
    out.extend(f"  {u} -- {v};" for u, v in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def read_graph(path: str | Path, graph6: bool = False) -> Graph:
    text = Path(path).read_text()
    if graph6:
        return parse_graph6(text.strip().split("\n", 1)[0])
    return parse_elt(text)

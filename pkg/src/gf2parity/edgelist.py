"""Plain-text edge-list format.

::

    # comment
    graph <n> <m>          (or: digraph <n> <m>)
    <u> <v>                m lines, 0-based vertices
    labels <bitstring>     optional, one bit per vertex

Blank lines and ``#`` comments are ignored anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from gf2parity.errors import ParseError
from gf2parity.gf2 import BitVector
from gf2parity.graph import Digraph, Graph


@dataclass(frozen=True)
class EdgeListFile:
    graph: Graph | Digraph
    labels: BitVector | None = None


def _int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(lineno, f"{what} must be non-negative, got {value}")
    return value


def parse_labeled_edge_list(text: str) -> EdgeListFile:
    kind = None
    n = m = 0
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels = None
    last_lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_lineno = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if kind is None:
            if tokens[0] not in ("graph", "digraph") or len(tokens) != 3:
                raise ParseError(lineno, "expected header 'graph <n> <m>' or 'digraph <n> <m>'")
            kind = tokens[0]
            n = _int(tokens[1], lineno, "vertex count")
            m = _int(tokens[2], lineno, "edge count")
            continue
        if tokens[0] == "labels":
            if labels is not None:
                raise ParseError(lineno, "duplicate labels line")
            if len(tokens) > 2:
                raise ParseError(lineno, "expected 'labels <bitstring>'")
            bits = tokens[1] if len(tokens) == 2 else ""
            if len(bits) != n or set(bits) - {"0", "1"}:
                raise ParseError(lineno, f"labels must be a 0/1 string of length {n}")
            labels = BitVector.from_string(bits)
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {line!r}")
        u = _int(tokens[0], lineno, "vertex")
        v = _int(tokens[1], lineno, "vertex")
        if u >= n or v >= n:
            raise ParseError(lineno, f"vertex index {max(u, v)} >= n={n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if kind == "digraph" else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"repeated {'arc' if kind == 'digraph' else 'edge'} {u} {v}")
        seen.add(key)
        pairs.append((u, v))
    if kind is None:
        raise ParseError(max(last_lineno, 1), "missing header line")
    if len(pairs) != m:
        raise ParseError(last_lineno, f"header announces {m} edges, found {len(pairs)}")
    if kind == "graph":
        return EdgeListFile(Graph.from_edges(n, pairs), labels)
    return EdgeListFile(Digraph.from_arcs(n, pairs), labels)


def parse_edge_list(text: str) -> Graph | Digraph:
    return parse_labeled_edge_list(text).graph


def serialize_edge_list(g: Graph | Digraph, labels: BitVector | None = None) -> str:
    """Canonical text: header, edges in lexicographic order (``u < v`` for graphs),
    then the labels line if given."""
    if isinstance(g, Graph):
        pairs = sorted(g.edges())
        lines = [f"graph {g.n} {len(pairs)}"]
    else:
        pairs = sorted(g.arcs())
        lines = [f"digraph {g.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    if labels is not None:
        lines.append(f"labels {labels.to_string()}".rstrip())
    return "\n".join(lines) + "\n"

"""Plain-text edge-list format.

::

    # optional comments
    vertices 4
    edge 0 0 1
    edge 1 1 2

Vertices are ``0..n-1``.  Graphs whose vertex ids are not contiguous are
written with their vertices compacted in increasing order; edge ids are always
preserved.
"""

from __future__ import annotations

from typing import TextIO

from .errors import GraphError
from .multigraph import Multigraph


class ParseError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps(g: Multigraph) -> str:
    if g.vertices != frozenset(range(g.num_vertices)):
        g = g.compact()
    lines = [f"vertices {g.num_vertices}"]
    lines += [f"edge {e} {u} {v}" for e, (u, v) in g.edges.items()]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Multigraph:
    n = None
    edges = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise ParseError("duplicate vertices header", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'vertices <n>'", lineno)
            n = int(parts[1])
        elif parts[0] == "edge":
            if n is None:
                raise ParseError("edge before vertices header", lineno)
            if len(parts) != 4 or not all(p.isdigit() for p in parts[1:]):
                raise ParseError("expected 'edge <id> <u> <v>'", lineno)
            e, u, v = map(int, parts[1:])
            if e in edges:
                raise ParseError(f"duplicate edge id {e}", lineno)
            if u >= n or v >= n:
                raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
            edges[e] = (u, v)
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing vertices header", 1)
    return Multigraph(range(n), edges)


def read(fp: TextIO) -> Multigraph:
    return loads(fp.read())


def write(g: Multigraph, fp: TextIO) -> None:
    fp.write(dumps(g))


def graph_to_json(g: Multigraph) -> dict:
    """JSON form that keeps arbitrary vertex ids (edge-list text requires ``0..n-1``)."""
    return {"vertices": sorted(g.vertices), "edges": [[e, u, v] for e, (u, v) in g.edges.items()]}


def graph_from_json(doc: dict) -> Multigraph:
    return Multigraph(doc["vertices"], [tuple(x) for x in doc["edges"]])

"""Theta graphs through two marked edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import GraphError, TheoremViolation
from ..multigraph import Multigraph, internally_disjoint_paths, simple_paths, edges_of_vertex_path
from .paths import Path, join, segment, shortest_path, walk

TYPE_A = "A"
TYPE_B = "B"


@dataclass(frozen=True)
class ThetaGraph:
    """Three internally disjoint xy-paths, each an edge-id tuple oriented from x."""

    x: int
    y: int
    paths: Tuple[Tuple[int, ...], ...]
    kind: str

    def edges(self) -> frozenset:
        return frozenset(e for p in self.paths for e in p)

    def vertex_paths(self, g: Multigraph) -> List[Path]:
        return [walk(g, self.x, p) for p in self.paths]

    def is_valid(self, g: Multigraph) -> bool:
        if len(self.paths) != 3 or self.x == self.y:
            return False
        inner = []
        for p in self.paths:
            if not p or any(e not in g.edges for e in p):
                return False
            vs, _ = walk(g, self.x, p)
            if vs[-1] != self.y or len(set(vs)) != len(vs):
                return False
            inner.append(set(vs[1:-1]))
        if len({e for p in self.paths for e in p}) != sum(len(p) for p in self.paths):
            return False
        return not (inner[0] & inner[1] or inner[0] & inner[2] or inner[1] & inner[2])


def classify(paths, e: int, f: int) -> Optional[str]:
    holders = [i for i, p in enumerate(paths) if e in p], [i for i, p in enumerate(paths) if f in p]
    if not holders[0] or not holders[1]:
        return None
    return TYPE_A if holders[0] == holders[1] else TYPE_B


def find_theta(g: Multigraph, x: int, y: int, e: int, f: int) -> ThetaGraph:
    """A theta graph on (x, y) that contains both ``e`` and ``f``.

    Starts from any three disjoint xy-paths and exchanges path prefixes (or a
    whole path) for a path through the missing marked edge until both are in.
    """
    if e not in g.edges or f not in g.edges or set(g.ends(e)) & set(g.ends(f)):
        raise GraphError("e and f must be non-adjacent edges")
    if x not in g.ends(e) or y not in g.ends(f):
        raise GraphError("x must be an end of e and y an end of f")
    found = internally_disjoint_paths(g, [x], [y], 3)
    if found is None:
        raise GraphError("fewer than three internally disjoint paths")
    paths: List[Path] = [(list(vs), list(es)) for vs, es in found]
    for _round in range(3):
        have_e = any(e in p[1] for p in paths)
        have_f = any(f in p[1] for p in paths)
        if have_e and have_f:
            break
        if not have_e:
            paths = _exchange(g, paths, x, y, e, f)
        else:
            # the same move with the roles of (x, e) and (y, f) swapped
            rev = [(list(reversed(vs)), list(reversed(es))) for vs, es in paths]
            rev = _exchange(g, rev, y, x, f, e)
            paths = [(list(reversed(vs)), list(reversed(es))) for vs, es in rev]
    kind = classify([p[1] for p in paths], e, f)
    if kind is None:
        raise TheoremViolation("exchange loop did not capture both marked edges", {"x": x, "y": y, "e": e, "f": f})
    return ThetaGraph(x, y, tuple(tuple(p[1]) for p in paths), kind)


def _exchange(g: Multigraph, paths: List[Path], x: int, y: int, e: int, f: int) -> List[Path]:
    x2 = g.other_end(e, x)
    tail = shortest_path(g, x2, y, banned_vertices=[x])
    if tail is None:
        raise TheoremViolation("G - x is disconnected", {"x": x})
    p = join(([x, x2], [e]), tail)
    on_theta = set()
    for vs, _ in paths:
        on_theta |= set(vs)
    i = next(k for k, v in enumerate(p[0]) if k > 0 and v in on_theta)
    vi = p[0][i]
    out = [(list(vs), list(es)) for vs, es in paths]
    if vi != y:
        q = next(k for k, (vs, _) in enumerate(out) if vi in vs)
        out[q] = join(segment(p, x, vi), segment(out[q], vi, y))
    else:
        r = next(k for k, (_, es) in enumerate(out) if f not in es)
        out[r] = segment(p, x, y)
    return out


def find_type_a_theta(g: Multigraph, e: int, f: int) -> Optional[ThetaGraph]:
    """Some type-A theta graph on an (end of e, end of f) pair, by exhaustive search.

    The path through both marked edges is e, then an x'y'-path avoiding x and
    y, then f; the other two paths come from a flow in what is left.
    """
    if set(g.ends(e)) & set(g.ends(f)):
        return None
    for x in sorted(set(g.ends(e))):
        for y in sorted(set(g.ends(f))):
            xp, yp = g.other_end(e, x), g.other_end(f, y)
            cands = sorted(simple_paths(g, xp, yp, banned_vertices=[x, y]), key=lambda vp: (len(vp), vp))
            for vp in cands:
                two = internally_disjoint_paths(g, [x], [y], 2, deleted=vp, banned_edges=[e, f])
                if two is None:
                    continue
                mid = edges_of_vertex_path(g, vp, banned_edges=[e, f])
                first = (e, *mid, f)
                paths = (first, tuple(two[0][1]), tuple(two[1][1]))
                th = ThetaGraph(x, y, paths, TYPE_A)
                if th.is_valid(g):
                    return th
    return None

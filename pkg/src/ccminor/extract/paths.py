"""Small helpers for ordered paths stored as (vertex list, edge list)."""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..multigraph import Multigraph, lex_min_shortest_path

Path = Tuple[List[int], List[int]]


def walk(g: Multigraph, start: int, es: Sequence[int]) -> Path:
    vs = [start]
    for e in es:
        vs.append(g.other_end(e, vs[-1]))
    return vs, list(es)


def reverse(p: Path) -> Path:
    return list(reversed(p[0])), list(reversed(p[1]))


def segment(p: Path, a: int, b: int) -> Path:
    """The part of ``p`` between vertices ``a`` and ``b``, oriented from ``a``."""
    vs, es = p
    i, j = vs.index(a), vs.index(b)
    if i <= j:
        return vs[i:j + 1], es[i:j]
    return reverse((vs[j:i + 1], es[j:i]))


def join(*ps: Path) -> Path:
    vs, es = list(ps[0][0]), list(ps[0][1])
    for p in ps[1:]:
        if p[0][0] != vs[-1]:
            raise ValueError("paths do not chain")
        vs.extend(p[0][1:])
        es.extend(p[1])
    return vs, es


def interior(p: Path) -> set:
    return set(p[0][1:-1])


def shortest_path(g: Multigraph, s: int, t: int, banned_vertices: Iterable[int] = (),
                  allowed: Optional[Iterable[int]] = None) -> Optional[Path]:
    es = lex_min_shortest_path(g, s, t, g.edges if allowed is None else allowed, banned_vertices)
    if es is None:
        return None
    remaining = set(es)
    vs, order = [s], []
    while remaining:
        e = next(x for x in sorted(remaining) if vs[-1] in g.ends(x))
        remaining.discard(e)
        order.append(e)
        vs.append(g.other_end(e, vs[-1]))
    return vs, order


def paths_to_stops(g: Multigraph, s: int, stops: set, banned_edges: Iterable[int] = ()) -> Dict[int, Path]:
    """Shortest paths from ``s`` to each reachable vertex of ``stops`` whose interior avoids ``stops``.

    Keys come out in BFS order, so the first key is a nearest stop.
    """
    banned = set(banned_edges)
    parent: Dict[int, Tuple[int, int]] = {}
    seen = {s}
    found: Dict[int, Path] = {}
    q = deque([s])

    def trace(v: int) -> Path:
        vs, es = [v], []
        while v != s:
            u, e = parent[v]
            vs.append(u)
            es.append(e)
            v = u
        return list(reversed(vs)), list(reversed(es))

    while q:
        v = q.popleft()
        for e in sorted(g.incident(v)):
            if e in banned or g.is_loop(e):
                continue
            w = g.other_end(e, v)
            if w == s:
                continue
            if w in stops:
                if w not in found:
                    vs, es = trace(v)
                    found[w] = (vs + [w], es + [e])
                continue
            if w not in seen:
                seen.add(w)
                parent[w] = (v, e)
                q.append(w)
    return found

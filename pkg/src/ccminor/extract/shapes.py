"""Independent shape checkers for extractor outputs."""

from __future__ import annotations

from typing import List, Optional, Tuple

from ..decompose import _threads, is_template
from ..multigraph import Multigraph, is_connected


def bond_size(h: Multigraph) -> Optional[int]:
    """n if ``h`` is the bond graph B_n (n >= 2), else None."""
    if h.num_vertices != 2 or h.has_loops() or h.num_edges < 2:
        return None
    return h.num_edges


def fan_decompositions(h: Multigraph) -> List[Tuple[int, List[int], List[int]]]:
    """All (hub, path, spoke multiplicities) readings of ``h`` as a fan-type graph.

    The path is listed from one end; each path is reported in one orientation.
    Bond graphs read as a one-vertex path.
    """
    out = []
    if h.has_loops() or h.num_vertices < 2:
        return out
    for c in sorted(h.vertices):
        rest = h.delete_vertices([c])
        pv = sorted(rest.vertices)
        if not is_connected(rest) or rest.num_edges != len(pv) - 1 or not rest.is_simple():
            continue
        if any(rest.degree(v) > 2 for v in pv):
            continue
        if any(h.multiplicity(c, v) < 1 for v in pv):
            continue
        ends = [v for v in pv if rest.degree(v) <= 1]
        start = min(ends)
        path, prev = [start], None
        while len(path) < len(pv):
            nxt = [u for u in rest.neighbors(path[-1]) if u != prev]
            prev = path[-1]
            path.append(nxt[0])
        out.append((c, path, [h.multiplicity(c, v) for v in path]))
    return out


def is_fan_type(h: Multigraph) -> bool:
    return bond_size(h) != 2 and bool(fan_decompositions(h))


def fan_outer_spokes_ok(h: Multigraph, e: int, f: int) -> bool:
    """``e`` and ``f`` are distinct, non-parallel outer spokes of a fan-type reading of ``h``."""
    if e == f or e not in h.edges or f not in h.edges:
        return False
    for c, path, _ in fan_decompositions(h):
        if len(path) < 2:
            continue
        ends = {path[0], path[-1]}
        se, sf = set(h.ends(e)), set(h.ends(f))
        if c in se and c in sf:
            pe, pf = (se - {c}).pop(), (sf - {c}).pop()
            if {pe, pf} == ends:
                return True
    return False


def k4_parallel_rule_ok(h: Multigraph, e: int, f: int) -> bool:
    """Simplification is K4 with e, f non-adjacent; only edges parallel to e or f are multiplied."""
    if h.num_vertices != 4 or h.has_loops() or e not in h.edges or f not in h.edges:
        return False
    if set(h.ends(e)) & set(h.ends(f)):
        return False
    vs = sorted(h.vertices)
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            m = h.multiplicity(a, b)
            if m < 1:
                return False
            if m > 1 and {a, b} not in (set(h.ends(e)), set(h.ends(f))):
                return False
    return True


def parallel_cycles_ok(h: Multigraph, e: int) -> Optional[int]:
    """Number of constituent cycles if ``h`` is a parallel connection of cycles with basepoint ``e``."""
    if e not in h.edges or h.is_loop(e) or h.has_loops():
        return None
    u, v = h.ends(e)
    rest = h.delete_edges([e])
    counts = _threads(rest, frozenset((u, v)))
    if counts is None or set(counts) - {(min(u, v), max(u, v))}:
        return None
    n = counts.get((min(u, v), max(u, v)), 0)
    if n < 1:
        return None
    if any(rest.degree(w) != 2 for w in h.vertices - {u, v}):
        return None
    return n


def template_parts(h: Multigraph) -> int:
    spec = is_template(h)
    return 0 if spec is None else spec.r

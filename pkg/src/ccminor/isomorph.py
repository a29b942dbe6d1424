"""Canonical codes for multigraphs and the exhaustive cc-minor oracle.

Canonical labelling is individualization-refinement: colour refinement on
multiplicities, then branching on the first non-singleton cell, keeping the
lexicographically least adjacency encoding among all leaves.  Automorphisms
discovered from equal leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

import os
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .ccops import ContractionTrace, Contractor, _identify, fingerprint
from .errors import CapExceeded
from .multigraph import Multigraph, iter_cycles

CANON_CAP = 10
ORACLE_CAP = 14


def oracle_cap() -> int:
    raw = os.environ.get("CCMINOR_CAP")
    return int(raw) if raw else ORACLE_CAP


def _matrix(g: Multigraph) -> Tuple[List[int], List[List[int]]]:
    idx = {v: i for i, v in enumerate(sorted(g.vertices))}
    n = len(idx)
    loops = [0] * n
    mult = [[0] * n for _ in range(n)]
    for a, b in g.edges.values():
        i, j = idx[a], idx[b]
        if i == j:
            loops[i] += 1
        else:
            mult[i][j] += 1
            mult[j][i] += 1
    return loops, mult


def _refine(colors: List[int], loops: List[int], mult: List[List[int]]) -> List[int]:
    n = len(colors)
    while True:
        sig = []
        for v in range(n):
            nb = sorted((colors[u], mult[v][u]) for u in range(n) if mult[v][u])
            sig.append((colors[v], loops[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _leaf_code(order: Sequence[int], loops, mult) -> Tuple[int, ...]:
    out = [len(order)]
    for i, v in enumerate(order):
        out.append(loops[v])
        out.extend(mult[v][order[j]] for j in range(i))
    return tuple(out)


def _search(loops, mult) -> Tuple[int, ...]:
    n = len(loops)
    if n == 0:
        return (0,)
    best: List = [None, None]  # code, order
    autos: List[List[int]] = []

    def node(colors: List[int], fixed: Tuple[int, ...]) -> None:
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=lambda v: colors[v])
            code = _leaf_code(order, loops, mult)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                perm = [0] * n
                for a, b in zip(best[1], order):
                    perm[a] = b
                autos.append(perm)
            return
        done: Set[int] = set()
        for v in target:
            if v in done:
                continue
            c = colors[v]
            split = [2 * x + (1 if (x == c and u != v) else 0) for u, x in enumerate(colors)]
            node(_refine(split, loops, mult), fixed + (v,))
            # orbit of v under known automorphisms fixing the current prefix
            gens = [p for p in autos if all(p[x] == x for x in fixed)]
            orbit = {v}
            frontier = [v]
            while frontier:
                x = frontier.pop()
                for p in gens:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            done |= orbit

    node(_refine([0] * n, loops, mult), ())
    return best[0]


def _code_bytes(code: Tuple[int, ...]) -> bytes:
    out = bytearray()
    for x in code:
        while True:
            b = x & 0x7F
            x >>= 7
            if x:
                out.append(b | 0x80)
            else:
                out.append(b)
                break
    return bytes(out)


def canonical_form(g: Multigraph, cap: Optional[int] = CANON_CAP) -> bytes:
    """Isomorphism-invariant byte code of ``g`` (equal iff isomorphic)."""
    if cap is not None and g.num_vertices > cap:
        raise CapExceeded(f"size cap: {g.num_vertices} vertices > {cap}")
    hit = g._cache.get("canon")
    if hit is None:
        hit = _code_bytes(_search(*_matrix(g)))
        g._cache["canon"] = hit
    return hit


def canonical_hex(g: Multigraph, cap: Optional[int] = CANON_CAP) -> str:
    return canonical_form(g, cap).hex()


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if (g.num_vertices, g.num_edges) != (h.num_vertices, h.num_edges):
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    return canonical_form(g, None) == canonical_form(h, None)


# -- the oracle -----------------------------------------------------------------


def cycle_vertex_sets(g: Multigraph) -> Dict[FrozenSet[int], FrozenSet[int]]:
    """One representative cycle per distinct vertex set, shortest then lexicographic.

    Contracting a cycle depends only on its vertex set, so this is the full
    branching set for cc-minor search.
    """
    reps: Dict[FrozenSet[int], FrozenSet[int]] = {}
    for c in iter_cycles(g):
        vs = g.vertices_of(c)
        old = reps.get(vs)
        if old is None or (len(c), sorted(c)) < (len(old), sorted(old)):
            reps[vs] = c
    return dict(sorted(reps.items(), key=lambda kv: (len(kv[1]), sorted(kv[1]))))


def _check_cap(g: Multigraph, cap: Optional[int]) -> None:
    cap = oracle_cap() if cap is None else cap
    if g.num_edges > cap:
        raise CapExceeded(f"size cap: {g.num_edges} edges > {cap}")


def is_cc_minor(g: Multigraph, h: Multigraph, cap: Optional[int] = None) -> Optional[ContractionTrace]:
    """A trace from ``g`` to a graph isomorphic to ``h``, or None."""
    _check_cap(g, cap)
    target = canonical_form(h, None)
    nv, ne = h.num_vertices, h.num_edges
    dead: Set[bytes] = set()
    path: List[FrozenSet[int]] = []

    def dfs(cur: Multigraph) -> bool:
        if cur.num_edges < ne or cur.num_vertices < nv:
            return False
        code = canonical_form(cur, None)
        if code == target:
            return True
        if code in dead or cur.num_edges == ne:
            return False
        for c in cycle_vertex_sets(cur).values():
            path.append(c)
            if dfs(_identify(cur, cur.vertices_of(c))):
                return True
            path.pop()
        dead.add(code)
        return False

    if not dfs(g):
        return None
    con = Contractor(g)
    for c in path:
        con.contract(c)
    return con.trace()


def cc_minor_classes(g: Multigraph, cap: Optional[int] = None) -> Dict[bytes, Multigraph]:
    """Every isomorphism class reachable by cycle contractions, with a representative."""
    _check_cap(g, cap)
    seen: Dict[bytes, Multigraph] = {canonical_form(g, None): g}
    stack = [g]
    while stack:
        cur = stack.pop()
        for c in cycle_vertex_sets(cur).values():
            nxt = _identify(cur, cur.vertices_of(c))
            code = canonical_form(nxt, None)
            if code not in seen:
                seen[code] = nxt
                stack.append(nxt)
    return seen


def enumerate_cc_minors(g: Multigraph, cap: Optional[int] = None) -> Set[bytes]:
    return set(cc_minor_classes(g, cap))

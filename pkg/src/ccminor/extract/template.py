"""Parallel-path extensions of templates with many parts, from 2-connected graphs.

Everything runs on the input graph itself: pendant pieces of the tree
decomposition are squeezed to bundles of parallel paths, then the chosen
labels are contracted with each absorbed basepoint replaced by its bundle,
so the trace replays on the input exactly.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Set, Tuple

from ..ccops import Contractor
from ..decompose import (B3, K3, THREE, DecompositionTree, check_parallel_path_extension, compose, is_template,
                         tutte_decomposition)
from ..errors import GraphError, TheoremViolation
from ..io import graph_to_json
from ..multigraph import Multigraph
from .bonds import extract_bond, extract_parallel_cycles
from .large import extract_large_3connected
from .result import TEMPLATE, ExtractionResult, failure
from .three_connected import extract_from_3connected

BIG_LABEL = 20


def _adjacency(td: DecompositionTree) -> Dict[int, List[Tuple[int, int]]]:
    return {n: td.neighbors(n) for n in td.nodes}


def _tree_path(td: DecompositionTree) -> List[int]:
    """A longest path of the decomposition tree, by the double sweep."""
    adj = _adjacency(td)

    def sweep(s):
        par = {s: None}
        q = deque([s])
        last = s
        while q:
            v = q.popleft()
            last = v
            for u, _ in adj[v]:
                if u not in par:
                    par[u] = v
                    q.append(u)
        path = [last]
        while par[path[-1]] is not None:
            path.append(par[path[-1]])
        return path

    a = sweep(min(td.nodes))[0]
    return sweep(a)[::-1]


def _pendants(td: DecompositionTree, center: Set[int]) -> List[Tuple[int, Set[int]]]:
    """(attaching basepoint, node set) for each component of the tree minus ``center``."""
    adj = _adjacency(td)
    out, seen = [], set()
    for n in sorted(center):
        for u, b in adj[n]:
            if u in center or u in seen:
                continue
            comp, q = {u}, deque([u])
            while q:
                v = q.popleft()
                for w, _ in adj[v]:
                    if w not in center and w not in comp:
                        comp.add(w)
                        q.append(w)
            seen |= comp
            out.append((b, comp))
    return out


def _sub_graph(td: DecompositionTree, ids: Set[int]) -> Multigraph:
    nodes = {n: td.nodes[n] for n in ids}
    edges = [te for te in td.tree_edges if te[0] in ids and te[1] in ids]
    return compose(DecompositionTree(nodes, edges))


def _absorb(con: Contractor, td: DecompositionTree, center: Set[int]) -> Dict[int, Set[int]]:
    """Squeeze each pendant piece to parallel paths; returns basepoint -> bundle edges."""
    bundles, doomed = {}, set()
    for b, comp in _pendants(td, center):
        piece = _sub_graph(td, comp)
        res = extract_parallel_cycles(piece, b)
        gone = set(res.trace.deleted_edges())
        doomed |= gone
        bundles[b] = set(piece.edges) - gone - {b}
    con.contract_edge_components(doomed)
    return bundles


def _lift(deleted, bundles: Dict[int, Set[int]]) -> Set[int]:
    out = set()
    for d in deleted:
        out |= bundles.get(d, {d})
    return out


def _finish(con: Contractor, g: Multigraph, parts: List[Tuple[Multigraph, Multigraph]], glue: Set[int],
            r: int, case: str) -> ExtractionResult:
    """Assemble the core from (label result, label) pairs and verify it."""
    core_edges = {}
    for h, _ in parts:
        for d, (a, b) in h.edges.items():
            if d not in glue:
                core_edges[d] = (con.image(a), con.image(b))
    core = Multigraph({v for ab in core_edges.values() for v in ab}, core_edges)
    out = con.graph
    spec = is_template(core)
    if spec is None:
        raise TheoremViolation("assembled core is not a template", {"core": core, "case": case})
    if not check_parallel_path_extension(out, core, {v: v for v in core.vertices}):
        raise TheoremViolation("output is not a parallel-path extension of the core", {"core": core, "case": case})
    params = {"parts": spec.r, "spec": spec.to_json(), "core": graph_to_json(core), "case": case}
    if spec.r < r:
        return failure(f"template has {spec.r} parts, fewer than {r}", **params)
    return ExtractionResult(TEMPLATE, out, con.trace(), params)


def _single_label(h: Multigraph, r: int) -> List[Tuple[Multigraph, set]]:
    """Candidate templates inside one 3-connected label, as (graph, deleted edges)."""
    cands = []
    if is_template(h) is not None:
        cands.append((h, set()))
    if h.num_vertices >= 4:
        res = extract_large_3connected(h, max(r + 2, 3))
        if res.ok:
            cands.append((res.graph, set(res.trace.deleted_edges())))
        res = extract_bond(h, min(h.edges))
        cands.append((res.graph, set(res.trace.deleted_edges())))
    return cands


def _big_label(g: Multigraph, td: DecompositionTree, v: int, r: int) -> Optional[ExtractionResult]:
    label = td.nodes[v].graph
    if td.nodes[v].tag != THREE:
        return None
    best = None
    for h, deleted in _single_label(label, r):
        con = Contractor(g)
        bundles = _absorb(con, td, {v})
        con.contract_edge_components(_lift(deleted, bundles))
        res = _finish(con, g, [(h, label)], set(), r, "big-label")
        if best is None or res.params["parts"] > best.params["parts"]:
            best = res
    return best


def _long_path(g: Multigraph, td: DecompositionTree, r: int) -> ExtractionResult:
    path = _tree_path(td)
    if len(path) == 1:
        return _big_label(g, td, path[0], r) or _verbatim(g, td, r)
    glue = []
    for a, c in zip(path, path[1:]):
        glue.append(next(b for u, b in td.neighbors(a) if u == c))
    con = Contractor(g)
    bundles = _absorb(con, td, set(path))
    parts, doomed = [], set()
    m = len(path)
    for i, n in enumerate(path):
        node = td.nodes[n]
        if node.tag in (K3, B3):
            parts.append((node.graph, node.graph))
            continue
        if node.tag != THREE:
            raise GraphError(f"unexpected label {node.tag}")
        if 0 < i < m - 1:
            res = extract_from_3connected(node.graph, glue[i - 1], glue[i])
        else:
            res = extract_bond(node.graph, glue[0] if i == 0 else glue[-1])
        parts.append((res.graph, node.graph))
        doomed |= set(res.trace.deleted_edges())
    con.contract_edge_components(_lift(doomed, bundles))
    return _finish(con, g, parts, set(glue), r, "long-path")


def _verbatim(g: Multigraph, td: DecompositionTree, r: int) -> ExtractionResult:
    return _finish(Contractor(g), g, [(g, g)], set(), r, "verbatim")


def extract_template(g: Multigraph, r: int, big_label_threshold: int = BIG_LABEL) -> ExtractionResult:
    """A cc-minor that is a parallel-path extension of a template with at least ``r`` parts."""
    if r < 1:
        raise GraphError("r must be positive")
    if g.has_loops():
        raise GraphError("graph has loops")
    td = tutte_decomposition(g)
    if len(td.nodes) == 1 and td.nodes[min(td.nodes)].tag not in (THREE, K3, B3):
        return failure("graph has no template cc-minor", parts=0)
    results = []
    big = sorted((n for n, node in td.nodes.items() if node.tag == THREE),
                 key=lambda n: (-td.nodes[n].graph.num_edges, n))
    if big and td.nodes[big[0]].graph.num_edges > big_label_threshold:
        res = _big_label(g, td, big[0], r)
        if res is not None:
            if res.ok:
                return res
            results.append(res)
    res = _long_path(g, td, r)
    if res.ok:
        return res
    results.append(res)
    if big and not (td.nodes[big[0]].graph.num_edges > big_label_threshold):
        alt = _big_label(g, td, big[0], r)
        if alt is not None:
            if alt.ok:
                return alt
            results.append(alt)
    return max(results, key=lambda x: x.params.get("parts", 0))

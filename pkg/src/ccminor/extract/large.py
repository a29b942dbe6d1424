"""Fan-type cc-minors with many spokes in large 3-connected graphs."""

from __future__ import annotations

from collections import deque
from typing import FrozenSet, Iterable, List, Optional, Tuple

from ..ccops import Contractor
from ..errors import GraphError
from ..multigraph import Multigraph, components, find_cycle, is_cycle, is_k_connected, is_tree, iter_cycles
from .bounds import HighDegreeVertex, f_wt, longest_path, max_weight_path, weighted_tree_witness
from .result import FAN_TYPE, ExtractionResult, failure
from .shapes import fan_decompositions

CANDIDATES = 10
CYCLE_CAP = 2000


def islands(g: Multigraph, cycle: Iterable[int]) -> List[Tuple[FrozenSet[int], int]]:
    """(island, number of bridges to the cycle) for each component of g - V(C)."""
    cv = g.vertices_of(cycle)
    rest = g.delete_vertices(cv)
    out = []
    for comp in components(rest):
        n = sum(1 for a, b in g.edges.values() if (a in cv and b in comp) or (b in cv and a in comp))
        out.append((frozenset(comp), n))
    return sorted(out, key=lambda p: (-p[1], min(p[0])))


def _prune(con: Contractor, hub: int, keep: set) -> bool:
    """Contract two-edge cycles at leaves outside ``keep``; False if a leaf has one spoke."""
    while True:
        h = con.graph
        c = con.image(hub)
        leaves = sorted(v for v in h.vertices if v != c and v not in keep
                        and sum(1 for d in h.incident(v) if c not in h.ends(d)) <= 1)
        if not leaves:
            return True
        spokes = sorted(h.edges_between(c, leaves[0]))
        if len(spokes) < 2:
            return False
        con.contract(spokes[:2])


def _keep_sets(tree: Multigraph, w: dict, t: int) -> List[set]:
    out = []
    if sum(w.values()) > f_wt(t):
        wit = weighted_tree_witness(tree, w, t)
        out.append({wit.vertex} if isinstance(wit, HighDegreeVertex) else set(wit.path))
    out.append(set(max_weight_path(tree, w)))
    out.append(set(longest_path(tree)))
    out.append({max(sorted(tree.vertices), key=lambda v: (tree.degree(v) + w.get(v, 0)))})
    uniq = []
    for s in out:
        if s not in uniq:
            uniq.append(s)
    return uniq


def extract_fan_from_cycle_island(g: Multigraph, c: Iterable[int], t: int,
                                  island: Optional[Iterable[int]] = None) -> ExtractionResult:
    """Contract everything off an island of ``c`` and shrink the island to a fan path."""
    c = frozenset(c)
    if g.has_loops():
        raise GraphError("graph has loops")
    if not is_cycle(g, c):
        raise GraphError("not a cycle")
    isl = islands(g, c)
    if not isl:
        raise GraphError("cycle has no island")
    if island is None:
        chosen = isl[0][0]
    else:
        chosen = frozenset(island)
        if chosen not in {i for i, _ in isl}:
            raise GraphError("not an island of the cycle")
    con = Contractor(g)
    outside = [d for d, (a, b) in g.edges.items() if a not in chosen and b not in chosen]
    con.contract_edges(outside)
    hub = min(g.vertices_of(c))
    while True:
        cyc = find_cycle(con.graph, must_avoid_vertices=[con.image(hub)])
        if cyc is None:
            break
        con.contract(cyc)
    ch = con.image(hub)
    h = con.graph
    tree = h.delete_vertices([ch])
    if not is_tree(tree):
        raise GraphError("island did not reduce to a tree")
    w = {v: h.multiplicity(ch, v) for v in tree.vertices}
    best = None
    for keep in _keep_sets(tree, w, t):
        trial = con.fork()
        if not _prune(trial, hub, keep):
            continue
        total = trial.graph.degree(trial.image(hub))
        if best is None or total > best[0] or (total == best[0] and len(trial.trace()) < len(best[1].trace())):
            best = (total, trial)
    if best is None:
        return failure("no leaf pruning succeeded", sum=0)
    total, trial = best
    h = trial.graph
    readings = [r for r in fan_decompositions(h) if r[0] == trial.image(hub)]
    if not readings:
        return failure("pruned graph is not fan-type", sum=total)
    c_v, path, ts = readings[0]
    if total < t:
        return failure(f"spoke total {total} is below {t}", sum=total, ts=ts)
    return ExtractionResult(FAN_TYPE, h, trial.trace(), {"ts": ts, "hub": c_v, "path": path, "sum": total})


def fundamental_cycles(g: Multigraph) -> List[FrozenSet[int]]:
    """Fundamental cycles of a BFS tree from every root, deduplicated."""
    seen = set()
    out = []
    for root in sorted(g.vertices):
        parent = {root: (None, None)}
        depth = {root: 0}
        q = deque([root])
        tree_edges = set()
        while q:
            v = q.popleft()
            for d in sorted(g.incident(v)):
                u = g.other_end(d, v)
                if u not in parent:
                    parent[u] = (v, d)
                    depth[u] = depth[v] + 1
                    tree_edges.add(d)
                    q.append(u)
        for d, (a, b) in sorted(g.edges.items()):
            if d in tree_edges or a == b:
                continue
            cyc = {d}
            while a != b:
                if depth[a] >= depth[b]:
                    a, e = parent[a]
                else:
                    b, e = parent[b]
                cyc.add(e)
            fc = frozenset(cyc)
            if fc not in seen:
                seen.add(fc)
                out.append(fc)
    return out


def _score(g: Multigraph, c) -> int:
    isl = islands(g, c)
    return isl[0][1] if isl else -1


def extract_large_3connected(g: Multigraph, t: int) -> ExtractionResult:
    """A fan-type cc-minor whose spoke total reaches ``t``, or an honest Failure."""
    if t < 3:
        raise GraphError("t must be at least 3")
    if not g.is_simple() or g.num_vertices < 4 or not is_k_connected(g, 3):
        raise GraphError("requires a simple 3-connected graph")
    best = None
    tried = set()

    def attempt(cands) -> Optional[ExtractionResult]:
        nonlocal best
        ranked = sorted((c for c in cands if c not in tried), key=lambda c: (-_score(g, c), len(c), sorted(c)))
        for c in ranked[:CANDIDATES]:
            tried.add(c)
            if _score(g, c) < 0:
                continue
            res = extract_fan_from_cycle_island(g, c, t)
            total = res.params.get("sum", 0)
            if best is None or total > best.params.get("sum", 0):
                best = res
            if res.ok:
                return res
        return None

    res = attempt(fundamental_cycles(g))
    if res is not None:
        return res
    # fallback: score every cycle up to a cap
    pool = []
    for i, c in enumerate(iter_cycles(g)):
        if i >= CYCLE_CAP:
            break
        pool.append(frozenset(c))
    res = attempt(pool)
    if res is not None:
        return res
    got = best.params.get("sum", 0) if best is not None else 0
    return failure(f"best spoke total {got} is below {t}", sum=got)

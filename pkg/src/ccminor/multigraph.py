"""Immutable multigraphs and the baseline algorithms everything else builds on.

A :class:`Multigraph` is a finite vertex set of non-negative integers plus a
mapping from edge id to an endpoint pair.  Loops and parallel edges are
allowed.  Edge ids are the currency of certificates, so operations that keep
an edge never change its id.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError

Edge = Tuple[int, int]


class Multigraph:
    __slots__ = ("_vertices", "_edges", "_inc", "_cache")

    def __init__(self, vertices: Iterable[int], edges: Mapping[int, Edge] | Iterable[Tuple[int, int, int]] = ()):
        vs = frozenset(int(v) for v in vertices)
        if isinstance(edges, Mapping):
            items = [(int(e), (int(uv[0]), int(uv[1]))) for e, uv in edges.items()]
        else:
            items = [(int(e), (int(u), int(v))) for e, u, v in edges]
        emap: Dict[int, Edge] = {}
        for e, (u, v) in items:
            if e < 0:
                raise GraphError(f"negative edge id {e}")
            if e in emap:
                raise GraphError(f"duplicate edge id {e}")
            if u not in vs or v not in vs:
                raise GraphError(f"edge {e} has an endpoint outside the vertex set")
            emap[e] = (u, v)
        if any(v < 0 for v in vs):
            raise GraphError("vertex ids must be non-negative")
        self._vertices = vs
        self._edges = dict(sorted(emap.items()))
        inc: Dict[int, List[int]] = {v: [] for v in vs}
        for e, (u, v) in self._edges.items():
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        self._inc = {v: tuple(es) for v, es in inc.items()}
        self._cache: dict = {}

    @classmethod
    def from_pairs(cls, pairs: Iterable[Edge], n: Optional[int] = None) -> "Multigraph":
        """Build a graph on ``range(n)`` with dense edge ids in the given order."""
        pairs = [(int(u), int(v)) for u, v in pairs]
        if n is None:
            n = 1 + max((max(p) for p in pairs), default=-1)
        return cls(range(n), {i: p for i, p in enumerate(pairs)})

    # -- basic accessors -------------------------------------------------------

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, Edge]:
        return self._edges

    def edge_ids(self) -> List[int]:
        return list(self._edges)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def ends(self, e: int) -> Edge:
        return self._edges[e]

    def other_end(self, e: int, v: int) -> int:
        a, b = self._edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def is_loop(self, e: int) -> bool:
        a, b = self._edges[e]
        return a == b

    def incident(self, v: int) -> Tuple[int, ...]:
        """Edge ids meeting ``v``; a loop is listed once."""
        return self._inc[v]

    def degree(self, v: int) -> int:
        return sum(2 if self.is_loop(e) else 1 for e in self._inc[v])

    def neighbors(self, v: int) -> List[int]:
        out = set()
        for e in self._inc[v]:
            w = self.other_end(e, v)
            if w != v:
                out.add(w)
        return sorted(out)

    def edges_between(self, u: int, v: int) -> List[int]:
        return [e for e in self._inc[u] if set(self._edges[e]) == {u, v} or (u == v and self.is_loop(e))]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.edges_between(u, v))

    def has_loops(self) -> bool:
        return any(a == b for a, b in self._edges.values())

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self._edges.values():
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True

    def vertices_of(self, edge_ids: Iterable[int]) -> FrozenSet[int]:
        out = set()
        for e in edge_ids:
            out.update(self._edges[e])
        return frozenset(out)

    def next_edge_id(self) -> int:
        return 1 + max(self._edges, default=-1)

    # -- derived graphs --------------------------------------------------------

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Multigraph":
        """The subgraph formed by ``edge_ids`` and the vertices they meet."""
        es = {e: self._edges[e] for e in edge_ids}
        return Multigraph(self.vertices_of(es), es)

    def spanning_subgraph(self, edge_ids: Iterable[int]) -> "Multigraph":
        keep = set(edge_ids)
        return Multigraph(self._vertices, {e: uv for e, uv in self._edges.items() if e in keep})

    def delete_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        drop = set(edge_ids)
        return Multigraph(self._vertices, {e: uv for e, uv in self._edges.items() if e not in drop})

    def delete_vertices(self, vs: Iterable[int]) -> "Multigraph":
        drop = set(vs)
        return Multigraph(
            self._vertices - drop,
            {e: (a, b) for e, (a, b) in self._edges.items() if a not in drop and b not in drop},
        )

    def induced(self, vs: Iterable[int]) -> "Multigraph":
        keep = set(vs)
        return self.delete_vertices(self._vertices - keep)

    def add_edges(self, new: Mapping[int, Edge]) -> "Multigraph":
        es = dict(self._edges)
        for e, uv in new.items():
            if e in es:
                raise GraphError(f"edge id {e} already present")
            es[e] = uv
        return Multigraph(self._vertices | {v for uv in new.values() for v in uv}, es)

    def relabel_vertices(self, mapping: Mapping[int, int]) -> "Multigraph":
        return Multigraph(
            {mapping.get(v, v) for v in self._vertices},
            {e: (mapping.get(a, a), mapping.get(b, b)) for e, (a, b) in self._edges.items()},
        )

    def compact(self) -> "Multigraph":
        """Relabel vertices to ``0..n-1`` preserving their order; edge ids unchanged."""
        mapping = {v: i for i, v in enumerate(sorted(self._vertices))}
        return self.relabel_vertices(mapping)

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._undirected() == other._undirected()

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._undirected().items())))

    def _undirected(self) -> Dict[int, Edge]:
        # edges are unordered pairs; the stored orientation only fixes dart numbering
        return {e: (min(uv), max(uv)) for e, uv in self._edges.items()}

    def __repr__(self) -> str:
        return f"Multigraph(|V|={self.num_vertices}, |E|={self.num_edges})"


# -- connectivity ---------------------------------------------------------------


def components(g: Multigraph, edge_ids: Optional[Iterable[int]] = None) -> List[FrozenSet[int]]:
    """Vertex sets of connected components, optionally using only ``edge_ids``."""
    allowed = None if edge_ids is None else set(edge_ids)
    seen: set = set()
    out = []
    for s in sorted(g.vertices):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.incident(v):
                if allowed is not None and e not in allowed:
                    continue
                w = g.other_end(e, v)
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Multigraph) -> bool:
    if g.num_vertices == 0:
        return False
    return len(components(g)) == 1


def cut_edges(g: Multigraph, edge_ids: Optional[Iterable[int]] = None) -> List[int]:
    """Bridges of ``g`` (restricted to ``edge_ids`` when given).  Loops are never bridges."""
    allowed = set(g.edges) if edge_ids is None else set(edge_ids)
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    bridges = []
    counter = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e not in allowed or e == via or g.is_loop(e):
                    continue
                w = g.other_end(e, v)
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(via)
    return sorted(bridges)


def is_two_edge_connected(g: Multigraph) -> bool:
    return g.num_vertices >= 2 and is_connected(g) and not cut_edges(g)


def is_bridgeless_connected_edges(g: Multigraph, edge_ids: Iterable[int]) -> bool:
    """True iff the subgraph formed by ``edge_ids`` is non-empty, connected and bridgeless."""
    es = set(edge_ids)
    if not es:
        return False
    sub = g.edge_subgraph(es)
    return is_connected(sub) and not cut_edges(sub)


def cut_vertices(g: Multigraph) -> List[int]:
    """Vertices lying in two or more blocks."""
    count: Dict[int, int] = {}
    for blk in blocks(g):
        for v in g.vertices_of(blk):
            count[v] = count.get(v, 0) + 1
    return sorted(v for v, c in count.items() if c > 1)


def blocks(g: Multigraph) -> List[FrozenSet[int]]:
    """Edge sets of the blocks (maximal 2-connected pieces and bridges); loops are skipped."""
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    out: List[FrozenSet[int]] = []
    estack: List[int] = []
    counter = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via or g.is_loop(e):
                    continue
                w = g.other_end(e, v)
                if w not in disc:
                    estack.append(e)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    blk = []
                    while True:
                        x = estack.pop()
                        blk.append(x)
                        if x == via:
                            break
                    out.append(frozenset(blk))
    return out


# -- flows ----------------------------------------------------------------------


class _Flow:
    """Unit-capacity augmenting-path max flow over explicit arcs."""

    def __init__(self):
        self.adj: Dict[object, List[int]] = {}
        self.head: List[object] = []
        self.cap: List[int] = []
        self.tag: List[object] = []

    def arc(self, a, b, cap, tag=None):
        for x in (a, b):
            self.adj.setdefault(x, [])
        self.adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(cap)
        self.tag.append(tag)
        self.adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)
        self.tag.append(None)

    def undirected(self, a, b, tag=None):
        """A single undirected unit edge: two arcs sharing capacity via cancellation."""
        self.arc(a, b, 1, tag)
        self.arc(b, a, 1, tag)

    def run(self, s, t, limit: Optional[int] = None) -> int:
        flow = 0
        if s not in self.adj or t not in self.adj:
            return 0
        while limit is None or flow < limit:
            prev = {s: -1}
            q = deque([s])
            while q and t not in prev:
                x = q.popleft()
                for i in self.adj[x]:
                    if self.cap[i] > 0 and self.head[i] not in prev:
                        prev[self.head[i]] = i
                        q.append(self.head[i])
            if t not in prev:
                break
            x = t
            while x != s:
                i = prev[x]
                self.cap[i] -= 1
                self.cap[i ^ 1] += 1
                x = self.head[i ^ 1]
            flow += 1
        return flow

    def reachable(self, s) -> set:
        seen = {s}
        q = deque([s])
        while q:
            x = q.popleft()
            for i in self.adj.get(x, ()):
                if self.cap[i] > 0 and self.head[i] not in seen:
                    seen.add(self.head[i])
                    q.append(self.head[i])
        return seen


def local_edge_connectivity(g: Multigraph, s: int, t: int) -> Tuple[int, FrozenSet[int]]:
    """Max number of edge-disjoint st-paths, with a minimum st edge cut."""
    fl = _Flow()
    for e, (a, b) in g.edges.items():
        if a != b:
            fl.undirected(a, b, e)
    value = fl.run(s, t)
    side = fl.reachable(s)
    cut = frozenset(e for e, (a, b) in g.edges.items() if (a in side) != (b in side))
    return value, cut


def min_edge_cut(g: Multigraph) -> FrozenSet[int]:
    """A minimum edge cut (a bond when ``g`` is connected)."""
    if g.num_vertices < 2:
        raise GraphError("too few vertices")
    vs = sorted(g.vertices)
    comps = components(g)
    if len(comps) > 1:
        return frozenset()
    best = None
    for t in vs[1:]:
        value, cut = local_edge_connectivity(g, vs[0], t)
        if best is None or value < len(best):
            best = cut
    return best


def edge_connectivity(g: Multigraph) -> int:
    """Size of a minimum edge cut; loops never count."""
    return len(min_edge_cut(g))


def _vertex_flow(g: Multigraph, xs: FrozenSet[int], ys: FrozenSet[int], deleted: FrozenSet[int] = frozenset(),
                 banned_edges: FrozenSet[int] = frozenset()) -> _Flow:
    fl = _Flow()
    src, snk = ("S",), ("T",)
    for v in g.vertices:
        if v in deleted:
            continue
        if v in xs:
            fl.arc(src, ("o", v), len(g.vertices) + g.num_edges)
        elif v in ys:
            fl.arc(("i", v), snk, len(g.vertices) + g.num_edges)
        else:
            fl.arc(("i", v), ("o", v), 1)
    for e, (a, b) in g.edges.items():
        if a == b or e in banned_edges or a in deleted or b in deleted:
            continue
        for u, w in ((a, b), (b, a)):
            # paths leave X only at their start and enter Y only at their end
            if w in xs or u in ys:
                continue
            fl.arc(("o", u), ("i", w), 1, e)
    return fl


def _decompose_paths(g: Multigraph, fl: _Flow, xs, ys) -> List[List[int]]:
    """Vertex sequences of the flow paths, each from X to Y."""
    used: Dict[object, List[int]] = {}
    for x, arcs in fl.adj.items():
        for i in arcs:
            if fl.tag[i] is not None and i % 2 == 0 and fl.cap[i] == 0:
                used.setdefault(x, []).append(i)
    # cancel opposite traversals of the same undirected edge
    flows = {}
    for x, arcs in used.items():
        for i in arcs:
            flows[i] = x
    by_edge: Dict[int, List[int]] = {}
    for i in flows:
        by_edge.setdefault(fl.tag[i], []).append(i)
    for e, arcs in by_edge.items():
        if len(arcs) == 2:
            for i in arcs:
                used[flows[i]].remove(i)
    paths = []
    for x in sorted(xs):
        node = ("o", x)
        while used.get(node):
            i = used[node].pop(0)
            path_v = [x]
            path_e = [fl.tag[i]]
            cur = fl.head[i]
            while True:
                v = cur[1]
                path_v.append(v)
                if v in ys:
                    break
                nxt = used[("o", v)].pop(0)
                path_e.append(fl.tag[nxt])
                cur = fl.head[nxt]
            paths.append((path_v, path_e))
    return paths


def internally_disjoint_paths(g: Multigraph, xs: Iterable[int], ys: Iterable[int], k: int,
                              deleted: Iterable[int] = (), banned_edges: Iterable[int] = ()) -> Optional[List[Tuple[List[int], List[int]]]]:
    """``k`` pairwise internally disjoint XY-paths, or ``None`` if they do not exist.

    Each path is returned as ``(vertex sequence, edge-id sequence)`` starting in X
    and ending in Y.  ``deleted`` vertices and ``banned_edges`` are ignored.
    """
    X, Y = frozenset(xs), frozenset(ys)
    if not X or not Y:
        raise GraphError("X and Y must be non-empty")
    if X & Y:
        raise GraphError("sets not disjoint")
    fl = _vertex_flow(g, X, Y, frozenset(deleted), frozenset(banned_edges))
    value = fl.run(("S",), ("T",), k)
    if value < k:
        return None
    return [(list(pv), list(pe)) for pv, pe in _decompose_paths(g, fl, X, Y)]


def count_internally_disjoint(g: Multigraph, xs: Iterable[int], ys: Iterable[int], limit: Optional[int] = None,
                              deleted: Iterable[int] = ()) -> int:
    X, Y = frozenset(xs), frozenset(ys)
    fl = _vertex_flow(g, X, Y, frozenset(deleted))
    return fl.run(("S",), ("T",), limit)


def is_k_connected(g: Multigraph, k: int) -> bool:
    """``|V| >= k`` and k internally disjoint paths join every pair of vertices."""
    if k < 1:
        raise GraphError("k must be positive")
    if g.num_vertices < k or g.num_vertices == 0:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if g.num_vertices == 1:
        return True
    if k == 2:
        if g.num_vertices == 2:
            a, b = sorted(g.vertices)
            return g.multiplicity(a, b) >= 2
        return not cut_vertices(g)
    for u, v in combinations(sorted(g.vertices), 2):
        if count_internally_disjoint(g, [u], [v], k) < k:
            return False
    return True


# -- cycles and paths -----------------------------------------------------------


def is_cycle(g: Multigraph, c: Iterable[int]) -> bool:
    es = list(c)
    if not es or len(set(es)) != len(es) or any(e not in g.edges for e in es):
        return False
    if len(es) == 1:
        return g.is_loop(es[0])
    deg: Dict[int, int] = {}
    for e in es:
        a, b = g.ends(e)
        if a == b:
            return False
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    return len(components(g.edge_subgraph(es))) == 1


def _bfs_layers(g: Multigraph, s: int, allowed: set, banned_v: set) -> Dict[int, int]:
    dist = {s: 0}
    q = deque([s])
    while q:
        v = q.popleft()
        for e in g.incident(v):
            if e not in allowed:
                continue
            w = g.other_end(e, v)
            if w == v or w in banned_v or w in dist:
                continue
            dist[w] = dist[v] + 1
            q.append(w)
    return dist


def lex_min_shortest_path(g: Multigraph, s: int, t: int, allowed: Iterable[int],
                          banned_vertices: Iterable[int] = ()) -> Optional[List[int]]:
    """Edge ids of a shortest st-path whose sorted id sequence is lexicographically least."""
    allowed = set(allowed)
    banned = set(banned_vertices)
    if s in banned or t in banned:
        return None
    ds = _bfs_layers(g, s, allowed, banned)
    if t not in ds:
        return None
    dt = _bfs_layers(g, t, allowed, banned)
    total = ds[t]
    # oriented DAG arcs (a -> b) lying on some shortest path, keyed by layer of a
    arcs: Dict[int, Tuple[int, int, int]] = {}
    for e in allowed:
        a, b = g.ends(e)
        if a == b or a in banned or b in banned:
            continue
        for x, y in ((a, b), (b, a)):
            if x in ds and y in dt and ds[x] + 1 + dt[y] == total:
                arcs[e] = (ds[x], x, y)
    out_arcs: Dict[int, List[Tuple[int, int]]] = {}
    for e, (_, x, y) in arcs.items():
        out_arcs.setdefault(x, []).append((e, y))

    def reach(a: int, b: int) -> bool:
        if a == b:
            return True
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for _, y in out_arcs.get(x, ()):
                if y == b:
                    return True
                if y not in seen and ds[y] < ds[b]:
                    seen.add(y)
                    stack.append(y)
        return False

    chosen: Dict[int, Tuple[int, int, int]] = {}

    def feasible(extra: Dict[int, Tuple[int, int, int]]) -> bool:
        seq = sorted(extra.values())
        cur = s
        for layer, x, y in seq:
            if not reach(cur, x):
                return False
            cur = y
        return reach(cur, t)

    for e in sorted(arcs):
        layer = arcs[e][0]
        if any(v[0] == layer for v in chosen.values()):
            continue
        trial = dict(chosen)
        trial[e] = arcs[e]
        if feasible(trial):
            chosen = trial
        if len(chosen) == total:
            break
    return sorted(chosen)


def _key(c: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    s = tuple(sorted(c))
    return (len(s), s)


def iter_cycles(g: Multigraph, avoid_vertices: Iterable[int] = (), avoid_edges: Iterable[int] = (),
                allowed_edges: Optional[Iterable[int]] = None) -> Iterator[FrozenSet[int]]:
    """Every cycle of ``g`` exactly once, as a frozenset of edge ids."""
    bv = set(avoid_vertices)
    be = set(avoid_edges)
    ok = set(g.edges) if allowed_edges is None else set(allowed_edges)
    ok -= be
    ok = {e for e in ok if not (set(g.ends(e)) & bv)}
    for e0 in sorted(ok):
        a, b = g.ends(e0)
        if a == b:
            yield frozenset([e0])
            continue
        # cycles whose smallest edge is e0: paths b -> a over larger ids
        stack = [(b, iter(g.incident(b)))]
        on_path = {b}
        path: List[int] = []
        while stack:
            v, it = stack[-1]
            step = None
            for e in it:
                if e <= e0 or e not in ok or g.is_loop(e):
                    continue
                w = g.other_end(e, v)
                if w == a:
                    yield frozenset([e0, *path, e])
                    continue
                if w in on_path:
                    continue
                step = (e, w)
                break
            if step is None:
                stack.pop()
                on_path.discard(v)
                if path:
                    path.pop()
                continue
            e, w = step
            path.append(e)
            on_path.add(w)
            stack.append((w, iter(g.incident(w))))


def find_cycle(g: Multigraph, must_contain: Iterable[int] = (), must_avoid_vertices: Iterable[int] = (),
               avoid_edges: Iterable[int] = ()) -> Optional[FrozenSet[int]]:
    """Shortest cycle containing ``must_contain`` and avoiding the given vertices/edges.

    Ties go to the lexicographically smallest sorted edge-id sequence.
    """
    need = set(must_contain)
    bv = set(must_avoid_vertices)
    be = set(avoid_edges)
    for e in need:
        if e not in g.edges:
            raise GraphError(f"edge {e} not in graph")
    if need & be or any(set(g.ends(e)) & bv for e in need):
        return None
    allowed = {e for e in g.edges if e not in be and not (set(g.ends(e)) & bv)}
    if len(need) >= 2:
        best = None
        for c in iter_cycles(g, allowed_edges=allowed):
            if need <= c and (best is None or _key(c) < _key(best)):
                best = c
        return best
    if len(need) == 1:
        (e,) = need
        return _shortest_cycle_through(g, e, allowed, bv)
    best = None
    for e in sorted(allowed):
        if best is not None and len(best) == 1:
            break
        c = _shortest_cycle_through(g, e, allowed, bv)
        if c is not None and (best is None or _key(c) < _key(best)):
            best = c
    return best


def _shortest_cycle_through(g: Multigraph, e: int, allowed: set, banned_v: set) -> Optional[FrozenSet[int]]:
    a, b = g.ends(e)
    if a == b:
        return frozenset([e])
    p = lex_min_shortest_path(g, a, b, allowed - {e}, banned_v)
    if p is None:
        return None
    return frozenset([e, *p])


def simple_paths(g: Multigraph, s: int, t: int, banned_vertices: Iterable[int] = (),
                 banned_edges: Iterable[int] = ()) -> Iterator[List[int]]:
    """Vertex sequences of all simple st-paths (parallel edges are not distinguished)."""
    banned = set(banned_vertices)
    be = set(banned_edges)
    if s in banned or t in banned:
        return
    adj = {v: sorted({g.other_end(e, v) for e in g.incident(v) if e not in be} - {v}) for v in g.vertices}
    if s == t:
        yield [s]
        return
    path = [s]
    on = {s}
    stack = [iter(adj[s])]
    while stack:
        nxt = None
        for w in stack[-1]:
            if w in on or w in banned:
                continue
            nxt = w
            break
        if nxt is None:
            stack.pop()
            on.discard(path.pop())
            continue
        if nxt == t:
            yield path + [t]
            continue
        path.append(nxt)
        on.add(nxt)
        stack.append(iter(adj[nxt]))


def edges_of_vertex_path(g: Multigraph, vpath: Sequence[int], banned_edges: Iterable[int] = ()) -> List[int]:
    """Pick the smallest-id edge for each consecutive pair of a vertex path."""
    be = set(banned_edges)
    out = []
    for u, v in zip(vpath, vpath[1:]):
        cands = [e for e in g.edges_between(u, v) if e not in be and e not in out]
        if not cands:
            raise GraphError(f"no edge between {u} and {v}")
        out.append(min(cands))
    return out


def path_vertices(g: Multigraph, start: int, edge_path: Sequence[int]) -> List[int]:
    """Vertex sequence of an edge path walked from ``start``."""
    vs = [start]
    for e in edge_path:
        vs.append(g.other_end(e, vs[-1]))
    return vs


def is_forest(g: Multigraph) -> bool:
    return not g.has_loops() and g.num_edges == g.num_vertices - len(components(g))


def is_tree(g: Multigraph) -> bool:
    return is_connected(g) and is_forest(g)

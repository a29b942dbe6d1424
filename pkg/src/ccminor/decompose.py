"""Tree decompositions into simple 3-connected, K3 and B3 labels; 2-sums; templates.

The decomposition is computed by repeatedly splitting along 2-separations
(parallel classes first), merging adjacent cycle pieces and adjacent bond
pieces into the unique Tutte components, and finally cutting every cycle or
bond component into a chain of triangles or triple bonds.  Labels keep the
vertex ids of the source graph, so composing the tree rebuilds the source
exactly, not just up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError
from .io import graph_from_json, graph_to_json
from .multigraph import Multigraph, components, cut_edges, cut_vertices, is_k_connected

THREE = "ThreeConnected"
K3 = "K3"
B3 = "B3"
B2 = "B2"

POLYGON = "Polygon"
BOND = "Bond"


# -- composition ------------------------------------------------------------------


def _check_basepoint(g: Multigraph, b: int, name: str) -> None:
    if b not in g.edges:
        raise GraphError(f"basepoint {b} missing from {name}")
    if g.is_loop(b):
        raise GraphError(f"basepoint {b} is a loop in {name}")
    if b in cut_edges(g):
        raise GraphError(f"basepoint {b} is a cut edge in {name}")


def _check_shared(g1: Multigraph, g2: Multigraph, b: int) -> None:
    _check_basepoint(g1, b, "first graph")
    _check_basepoint(g2, b, "second graph")
    if set(g1.ends(b)) != set(g2.ends(b)):
        raise GraphError(f"basepoint {b} has different ends in the two graphs")
    shared_e = set(g1.edges) & set(g2.edges)
    if shared_e != {b}:
        raise GraphError(f"graphs share edges {sorted(shared_e - {b})} besides the basepoint")
    if g1.vertices & g2.vertices != set(g1.ends(b)):
        raise GraphError("graphs share vertices other than the basepoint ends")


def two_sum(g1: Multigraph, g2: Multigraph, b: int) -> Multigraph:
    """Glue along the shared edge ``b`` and delete it."""
    _check_shared(g1, g2, b)
    edges = {e: uv for e, uv in g1.edges.items() if e != b}
    edges.update((e, uv) for e, uv in g2.edges.items() if e != b)
    return Multigraph(g1.vertices | g2.vertices, edges)


def parallel_connection(gs: Sequence[Multigraph], b: int) -> Multigraph:
    """Union of graphs pairwise sharing exactly ``b`` and its ends; ``b`` is kept."""
    if not gs:
        raise GraphError("no graphs given")
    for i, j in combinations(range(len(gs)), 2):
        _check_shared(gs[i], gs[j], b)
    if len(gs) == 1:
        _check_basepoint(gs[0], b, "the graph")
    vs = set()
    edges = {}
    for h in gs:
        vs |= h.vertices
        edges.update(h.edges)
    return Multigraph(vs, edges)


# -- trees --------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeNode:
    tag: str
    graph: Multigraph


@dataclass
class DecompositionTree:
    nodes: Dict[int, TreeNode]
    tree_edges: List[Tuple[int, int, int]] = field(default_factory=list)

    def basepoints(self, n: int) -> FrozenSet[int]:
        return frozenset(b for a, c, b in self.tree_edges if n in (a, c))

    def neighbors(self, n: int) -> List[Tuple[int, int]]:
        """(neighbour, basepoint) pairs."""
        out = []
        for a, c, b in self.tree_edges:
            if a == n:
                out.append((c, b))
            elif c == n:
                out.append((a, b))
        return sorted(out)

    def real_edges(self) -> FrozenSet[int]:
        virtual = {b for _, _, b in self.tree_edges}
        out = set()
        for node in self.nodes.values():
            out |= set(node.graph.edges) - virtual
        return frozenset(out)

    def validate(self) -> None:
        ids = sorted(self.nodes)
        if not ids:
            raise GraphError("empty tree")
        if len(self.tree_edges) != len(ids) - 1:
            raise GraphError("tree edge count is not |nodes| - 1")
        parent = {n: n for n in ids}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for a, c, b in self.tree_edges:
            if a not in self.nodes or c not in self.nodes:
                raise GraphError("tree edge references a missing node")
            ra, rc = find(a), find(c)
            if ra == rc:
                raise GraphError("tree edges contain a cycle")
            parent[ra] = rc
        adjacent = {}
        for a, c, b in self.tree_edges:
            adjacent[frozenset((a, c))] = b
        for a, c in combinations(ids, 2):
            shared = set(self.nodes[a].graph.edges) & set(self.nodes[c].graph.edges)
            b = adjacent.get(frozenset((a, c)))
            if b is None:
                if shared:
                    raise GraphError(f"non-adjacent labels {a}, {c} share edges")
            else:
                if shared != {b}:
                    raise GraphError(f"adjacent labels {a}, {c} do not share exactly their basepoint")
                for n in (a, c):
                    _check_basepoint(self.nodes[n].graph, b, f"label {n}")
        if len(ids) > 1:
            for n in ids:
                if self.nodes[n].graph.num_edges < 3:
                    raise GraphError(f"label {n} has fewer than 3 edges")

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n, "tag": nd.tag, "graph": graph_to_json(nd.graph)} for n, nd in sorted(self.nodes.items())],
            "tree_edges": [list(te) for te in self.tree_edges],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "DecompositionTree":
        nodes = {d["id"]: TreeNode(d["tag"], graph_from_json(d["graph"])) for d in doc["nodes"]}
        return cls(nodes, [tuple(te) for te in doc["tree_edges"]])

    def to_dot(self) -> str:
        lines = ["graph decomposition {"]
        for n, nd in sorted(self.nodes.items()):
            es = " ".join(str(e) for e in nd.graph.edges)
            lines.append(f'  n{n} [label="{nd.tag}\\n{es}"];')
        for a, c, b in self.tree_edges:
            lines.append(f'  n{a} -- n{c} [label="{b}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def compose(t: DecompositionTree, order: Optional[Sequence[int]] = None) -> Multigraph:
    """2-sum across every tree edge; ``order`` permutes the tree edges."""
    t.validate()
    current = {n: nd.graph for n, nd in t.nodes.items()}
    parent = {n: n for n in t.nodes}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    tes = list(t.tree_edges) if order is None else [t.tree_edges[i] for i in order]
    for a, c, b in tes:
        ra, rc = find(a), find(c)
        merged = two_sum(current[ra], current[rc], b)
        parent[rc] = ra
        current[ra] = merged
        del current[rc]
    (g,) = current.values()
    return g


# -- decomposition ------------------------------------------------------------------


def _separation(h: Multigraph) -> Optional[Tuple[int, int, FrozenSet[int]]]:
    """A 2-separation (a, b, component) of a simple 2-connected graph, or None."""
    for a in sorted(h.vertices):
        rest = h.delete_vertices([a])
        cv = cut_vertices(rest)
        if not cv:
            continue
        b = cv[0]
        comps = components(rest.delete_vertices([b]))
        return a, b, min(comps, key=min)
    return None


def _split(h: Multigraph, x: int) -> Optional[Tuple[Multigraph, Multigraph]]:
    """Split ``h`` into two pieces sharing the new virtual edge ``x``, or None if terminal."""
    if h.num_edges <= 3:
        return None
    classes: Dict[Tuple[int, int], List[int]] = {}
    for e, (a, b) in h.edges.items():
        classes.setdefault((min(a, b), max(a, b)), []).append(e)
    multi = sorted((k, es) for k, es in classes.items() if len(es) > 1)
    if len(classes) == 1:
        (uv, es), = classes.items()
        first = {es[0]: uv, es[1]: uv, x: uv}
        second = {e: uv for e in es[2:]}
        second[x] = uv
        return Multigraph(uv, first), Multigraph(uv, second)
    if multi:
        uv, es = multi[0]
        first = {e: h.ends(e) for e in es}
        first[x] = uv
        second = {e: p for e, p in h.edges.items() if e not in first}
        second[x] = uv
        return Multigraph(uv, first), Multigraph(h.vertices, second)
    sep = _separation(h)
    if sep is None:
        return None
    a, b, comp = sep
    e1 = {e: (u, v) for e, (u, v) in h.edges.items() if u in comp or v in comp}
    e2 = {e: p for e, p in h.edges.items() if e not in e1}
    v2 = h.vertices - comp
    e1[x] = (a, b)
    e2[x] = (a, b)
    return Multigraph(comp | {a, b}, e1), Multigraph(v2, e2)


def _kind(h: Multigraph) -> str:
    if h.num_vertices == 2:
        return BOND
    if h.num_edges == h.num_vertices:
        return POLYGON
    return THREE


def _precheck(g: Multigraph) -> None:
    if g.has_loops():
        raise GraphError("graph has loops")
    if not is_k_connected(g, 2):
        raise GraphError("not 2-connected")


def tutte_components(g: Multigraph) -> Tuple[Dict[int, Tuple[str, Multigraph]], List[Tuple[int, int, int]], int]:
    """The unique Tutte components (``Polygon``, ``Bond``, ``ThreeConnected``) and their tree.

    Also returns the next unused virtual edge id.
    """
    _precheck(g)
    nxt = g.next_edge_id()
    work = [g]
    pieces: List[Multigraph] = []
    while work:
        h = work.pop()
        sp = _split(h, nxt)
        if sp is None:
            pieces.append(h)
        else:
            nxt += 1
            work.extend(sp)
    kinds = [_kind(p) for p in pieces]
    holder: Dict[int, List[int]] = {}
    for i, p in enumerate(pieces):
        for e in p.edges:
            if e >= g.next_edge_id():
                holder.setdefault(e, []).append(i)
    parent = list(range(len(pieces)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    merged_virtual = set()
    for x, (i, j) in sorted(holder.items()):
        if kinds[i] == kinds[j] and kinds[i] in (POLYGON, BOND):
            parent[find(j)] = find(i)
            merged_virtual.add(x)
    groups: Dict[int, List[int]] = {}
    for i in range(len(pieces)):
        groups.setdefault(find(i), []).append(i)
    nodes: Dict[int, Tuple[str, Multigraph]] = {}
    gid: Dict[int, int] = {}
    ordered = sorted(groups.values(), key=lambda grp: min(min(pieces[i].edges) for i in grp))
    for n, grp in enumerate(ordered):
        edges = {}
        vs = set()
        for i in grp:
            vs |= pieces[i].vertices
            edges.update((e, uv) for e, uv in pieces[i].edges.items() if e not in merged_virtual)
            gid[i] = n
        nodes[n] = (kinds[grp[0]], Multigraph(vs, edges))
    tree = [(min(gid[i], gid[j]), max(gid[i], gid[j]), x) for x, (i, j) in sorted(holder.items()) if x not in merged_virtual]
    return nodes, tree, nxt


def cycle_order(h: Multigraph) -> Tuple[List[int], List[int]]:
    """Edges e1..em of a cycle graph in cyclic order from its lowest edge id, and vertices w0..w(m-1).

    ``e_i`` joins ``w_(i-1)`` and ``w_i`` (indices mod m).
    """
    es = sorted(h.edges)
    e1 = es[0]
    a, b = h.ends(e1)
    nb_a = min(e for e in h.incident(a) if e != e1)
    nb_b = min(e for e in h.incident(b) if e != e1)
    w0, w1 = (a, b) if nb_b < nb_a else (b, a)
    order, verts = [e1], [w0, w1]
    cur, v = e1, w1
    while len(order) < len(es):
        nx = next(e for e in h.incident(v) if e != cur)
        order.append(nx)
        v = h.other_end(nx, v)
        cur = nx
        if len(order) < len(es):
            verts.append(v)
    return order, verts


def _chain(kind: str, h: Multigraph, nxt: int) -> Tuple[List[Tuple[str, Multigraph]], List[Tuple[int, int, int]], int]:
    """Cut a cycle or bond component into a chain of K3 or B3 labels (local node indices)."""
    m = h.num_edges
    if m <= 3:
        tag = K3 if kind == POLYGON else (B3 if m == 3 else B2)
        return [(tag, h)], [], nxt
    ys = list(range(nxt, nxt + m - 3))
    nodes = []
    if kind == BOND:
        uv = tuple(sorted(h.vertices))
        ps = sorted(h.edges)
        groups = [[ps[0], ps[1], ys[0]]] + [[ys[i - 1], ps[i + 1], ys[i]] for i in range(1, m - 3)] + [[ys[-1], ps[-2], ps[-1]]]
        for grp in groups:
            nodes.append((B3, Multigraph(uv, {e: uv for e in grp})))
    else:
        es, w = cycle_order(h)
        trip = [[(es[0], (w[0], w[1])), (es[1], (w[1], w[2])), (ys[0], (w[0], w[2]))]]
        for i in range(1, m - 3):
            trip.append([(ys[i - 1], (w[0], w[i + 1])), (es[i + 1], (w[i + 1], w[i + 2])), (ys[i], (w[0], w[i + 2]))])
        trip.append([(ys[-1], (w[0], w[m - 2])), (es[m - 2], h.ends(es[m - 2])), (es[m - 1], h.ends(es[m - 1]))])
        for t in trip:
            edges = dict(t)
            nodes.append((K3, Multigraph({v for uv in edges.values() for v in uv}, edges)))
    tree = [(i, i + 1, ys[i]) for i in range(m - 3)]
    return nodes, tree, nxt + m - 3


def tutte_decomposition(g: Multigraph) -> DecompositionTree:
    comps, ctree, nxt = tutte_components(g)
    nodes: Dict[int, TreeNode] = {}
    tree: List[Tuple[int, int, int]] = []
    where: Dict[int, int] = {}  # edge id -> node holding it (for component-tree edges)
    for cid in sorted(comps):
        kind, h = comps[cid]
        if kind == THREE:
            parts, local, nxt2 = [(THREE, h)], [], nxt
        else:
            parts, local, nxt2 = _chain(kind, h, nxt)
        nxt = nxt2
        base = len(nodes)
        for i, (tag, lab) in enumerate(parts):
            nodes[base + i] = TreeNode(tag, lab)
            for e in lab.edges:
                where.setdefault(e, base + i)
        tree.extend((base + a, base + c, b) for a, c, b in local)
    for _, _, x in ctree:
        holders = [n for n, nd in nodes.items() if x in nd.graph.edges]
        tree.append((min(holders), max(holders), x))
    return DecompositionTree(nodes, tree)


# -- templates ------------------------------------------------------------------------


@dataclass(frozen=True)
class TemplateSpec:
    """Parts along a path; ``k4_matching[i]`` says an internal K4 uses non-adjacent basepoints."""

    parts: Tuple[str, ...]
    k4_matching: Tuple[bool, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not self.k4_matching:
            object.__setattr__(self, "k4_matching", tuple(True for _ in parts))
        if not parts:
            raise GraphError("a template needs at least one part")
        if any(p not in ("K3", "B3", "K4") for p in parts):
            raise GraphError("parts must be K3, B3 or K4")
        if len(self.k4_matching) != len(parts):
            raise GraphError("k4_matching length differs from parts")
        for i, p in enumerate(parts):
            if p == "K4" and 0 < i < len(parts) - 1 and not self.k4_matching[i]:
                raise GraphError("internal K4 part must use non-adjacent basepoints")

    @property
    def r(self) -> int:
        return len(self.parts)

    def num_edges(self) -> int:
        return self.parts.count("K3") + self.parts.count("B3") + 4 * self.parts.count("K4") + 2

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}


def template_tree(spec: TemplateSpec) -> DecompositionTree:
    """The path decomposition of the template described by ``spec``."""
    r = spec.r
    real_count = spec.num_edges()
    next_real = iter(range(real_count))
    virtual = [real_count + i for i in range(r - 1)]
    nodes: Dict[int, TreeNode] = {}
    nv = 0

    def fresh():
        nonlocal nv
        nv += 1
        return nv - 1

    x, y = fresh(), fresh()
    for i, p in enumerate(spec.parts):
        inc = virtual[i - 1] if i > 0 else next(next_real)
        last = i == r - 1

        def e_out():
            return next(next_real) if last else virtual[i]

        if p == "K3":
            z = fresh()
            edges = {inc: (x, y), next(next_real): (x, z)}
            out = e_out()
            edges[out] = (z, y)
            nxt = (z, y)
        elif p == "B3":
            edges = {inc: (x, y), next(next_real): (x, y)}
            out = e_out()
            edges[out] = (x, y)
            nxt = (x, y)
        else:
            z, w = fresh(), fresh()
            edges = {inc: (x, y)}
            for uv in ((x, z), (x, w), (y, z), (y, w)):
                edges[next(next_real)] = uv
            out = e_out()
            edges[out] = (z, w)
            nxt = (z, w)
        nodes[i] = TreeNode(p, Multigraph({v for uv in edges.values() for v in uv}, edges))
        x, y = nxt
    tree = [(i, i + 1, virtual[i]) for i in range(r - 1)]
    return DecompositionTree(nodes, tree)


def build_template(spec: TemplateSpec) -> Multigraph:
    return compose(template_tree(spec))


def _is_k4(h: Multigraph) -> bool:
    return h.num_vertices == 4 and h.num_edges == 6 and h.is_simple()


def template_path(g: Multigraph) -> Optional[Tuple[List[int], Dict[int, Tuple[str, Multigraph]], List[Tuple[int, int, int]]]]:
    """Component ids along the Tutte tree when it witnesses a template, else None."""
    try:
        comps, tree, _ = tutte_components(g)
    except GraphError:
        return None
    if len(comps) == 1:
        kind, h = comps[0]
        if (kind == BOND and h.num_edges < 3) or (kind == THREE and not _is_k4(h)):
            return None
        return [0], comps, tree
    adj: Dict[int, List[Tuple[int, int]]] = {n: [] for n in comps}
    for a, c, b in tree:
        adj[a].append((c, b))
        adj[c].append((a, b))
    if any(len(v) > 2 for v in adj.values()):
        return None
    for n, (kind, h) in comps.items():
        if kind == THREE:
            if not _is_k4(h):
                return None
            if len(adj[n]) == 2:
                (_, b1), (_, b2) = adj[n]
                if set(h.ends(b1)) & set(h.ends(b2)):
                    return None
    start = min(n for n in comps if len(adj[n]) == 1)
    path, prev = [start], None
    while True:
        nxt = [c for c, _ in adj[path[-1]] if c != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return path, comps, tree


def is_template(g: Multigraph) -> Optional[TemplateSpec]:
    """The template structure of ``g`` (its part count is forced by the Tutte tree), or None."""
    found = template_path(g)
    if found is None:
        return None
    path, comps, _ = found
    parts: List[str] = []
    for n in path:
        kind, h = comps[n]
        if kind == THREE:
            parts.append("K4")
        else:
            parts.extend([K3 if kind == POLYGON else B3] * (h.num_edges - 2))
    return TemplateSpec(tuple(parts))


# -- parallel-path extensions -----------------------------------------------------------


def _threads(g: Multigraph, anchors: FrozenSet[int]) -> Optional[Dict[Tuple[int, int], int]]:
    """Count anchor-to-anchor threads through degree-2 non-anchors; None if some piece is not a thread."""
    counts: Dict[Tuple[int, int], int] = {}
    used = set()
    for a in sorted(anchors):
        for e in g.incident(a):
            if e in used:
                continue
            if g.is_loop(e):
                return None
            used.add(e)
            prev, v = e, g.other_end(e, a)
            while v not in anchors:
                if g.degree(v) != 2:
                    return None
                nx = next(x for x in g.incident(v) if x != prev)
                used.add(nx)
                prev, v = nx, g.other_end(nx, v)
            if v == a:
                return None
            key = (min(a, v), max(a, v))
            counts[key] = counts.get(key, 0) + 1
    if len(used) != g.num_edges:
        return None
    return counts


def check_parallel_path_extension(g: Multigraph, k: Multigraph, anchors: Mapping[int, int]) -> bool:
    """Is ``g`` a parallel-path extension of ``k`` with ``k``-vertex v sitting at ``anchors[v]``?"""
    if set(anchors) != set(k.vertices) or len(set(anchors.values())) != len(anchors):
        return False
    if any(a not in g.vertices for a in anchors.values()):
        return False
    counts = _threads(g, frozenset(anchors.values()))
    if counts is None:
        return False
    need: Dict[Tuple[int, int], int] = {}
    for a, b in k.edges.values():
        x, y = anchors[a], anchors[b]
        key = (min(x, y), max(x, y))
        need[key] = need.get(key, 0) + 1
    if set(need) != set(counts):
        return False
    return all(counts[key] >= need[key] for key in need)


def find_parallel_path_anchors(g: Multigraph, k: Multigraph) -> Optional[Dict[int, int]]:
    """Search for an anchor map witnessing ``g`` as a parallel-path extension of ``k``."""
    if k.has_loops() or g.has_loops():
        return None
    kv = sorted(k.vertices)
    if not kv:
        return {} if g.num_vertices == 0 else None
    if g.num_vertices < len(kv) or g.num_edges < k.num_edges:
        return None
    high = {v for v in g.vertices if g.degree(v) != 2}
    if len(high) > len(kv):
        return None
    # BFS order over k from a vertex of largest degree
    order: List[int] = []
    seen = set()
    for root in sorted(kv, key=lambda v: (-k.degree(v), v)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(set(k.neighbors(v))):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    assign: Dict[int, int] = {}

    def reachable_anchor(src: int, dst: int, taken: set) -> int:
        """Number of walks from src through free degree-2 vertices ending at dst."""
        n = 0
        for e in g.incident(src):
            prev, v = e, g.other_end(e, src)
            while v != dst and v not in taken and g.degree(v) == 2:
                nx = next(x for x in g.incident(v) if x != prev)
                prev, v = nx, g.other_end(nx, v)
                if v == src:
                    break
            if v == dst:
                n += 1
        return n

    def rec(i: int) -> bool:
        if i == len(order):
            return check_parallel_path_extension(g, k, assign)
        v = order[i]
        taken = set(assign.values())
        remaining_high = len(high - taken)
        if remaining_high > len(order) - i:
            return False
        for cand in sorted(g.vertices - taken):
            if g.degree(cand) < k.degree(v):
                continue
            if k.degree(v) >= 3 and cand not in high:
                continue
            if cand not in high and remaining_high == len(order) - i:
                continue
            ok = True
            for u in set(k.neighbors(v)):
                if u in assign and reachable_anchor(assign[u], cand, taken) < k.multiplicity(u, v):
                    ok = False
                    break
            if not ok:
                continue
            assign[v] = cand
            if rec(i + 1):
                return True
            del assign[v]
        return False

    return dict(assign) if rec(0) else None


def is_parallel_path_extension(g: Multigraph, k: Multigraph, anchors: Optional[Mapping[int, int]] = None) -> bool:
    if anchors is not None:
        return check_parallel_path_extension(g, k, anchors)
    return find_parallel_path_anchors(g, k) is not None

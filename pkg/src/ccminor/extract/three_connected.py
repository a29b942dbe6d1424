"""Fan-type, bond or K4 cc-minors through two marked edges of a 3-connected graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..ccops import Contractor
from ..errors import GraphError, TheoremViolation
from ..multigraph import (Multigraph, blocks, find_cycle, internally_disjoint_paths, is_k_connected)
from .paths import Path, interior, join, paths_to_stops, reverse, segment, walk
from .result import BOND, FAN_TYPE, K4_EXT, ExtractionResult
from .shapes import bond_size, fan_decompositions, fan_outer_spokes_ok, k4_parallel_rule_ok
from .theta import TYPE_A, ThetaGraph, find_theta, find_type_a_theta

# terminals of each path, in orientation order
_ENDS = {1: ("x2", "y1"), 2: ("x1", "y1"), 3: ("x1", "y2"), 4: ("x2", "y2")}
_OPPOSITE = {1: 3, 3: 1, 2: 4, 4: 2}


class _Escape(Exception):
    """A type-A theta graph turned up; switch to the fan pipeline."""

    def __init__(self, theta: ThetaGraph):
        super().__init__("type-A theta found")
        self.theta = theta


@dataclass
class FourPathConnector:
    """Four paths joining x2-y1, x1-y1, x1-y2 and x2-y2, plus the marked edges."""

    terminals: Dict[str, int]
    paths: Dict[int, Path]

    def vertices(self) -> set:
        out = set(self.terminals.values())
        for vs, _ in self.paths.values():
            out |= set(vs)
        return out

    def edges(self, e: int, f: int) -> set:
        out = {e, f}
        for _, es in self.paths.values():
            out |= set(es)
        return out

    def spanning(self, g: Multigraph) -> bool:
        return self.vertices() == set(g.vertices)


def _violation(msg: str, con: Contractor, **extra) -> TheoremViolation:
    state = {"graph": con.graph, "steps": len(con.trace())}
    state.update(extra)
    return TheoremViolation(msg, state)


def _validate(g: Multigraph, e: int, f: int) -> None:
    if e not in g.edges or f not in g.edges or e == f:
        raise GraphError("e and f must be distinct edges of g")
    if g.is_loop(e) or g.is_loop(f):
        raise GraphError("marked edges must not be loops")
    if set(g.ends(e)) == set(g.ends(f)):
        raise GraphError("marked edges are parallel")
    if g.num_vertices < 4 or not is_k_connected(g, 3):
        raise GraphError("not 3-connected")


def extract_from_3connected(g: Multigraph, e: int, f: int) -> ExtractionResult:
    """A cc-minor containing ``e`` and ``f`` that is a fan-type graph with
    outer spokes e, f, a bond, or a parallel extension of K4 with e, f
    non-adjacent and only their classes multiplied.
    """
    _validate(g, e, f)
    con = Contractor(g)
    x1, x2 = sorted(g.ends(e))
    y1, y2 = sorted(g.ends(f))
    shared = set(g.ends(e)) & set(g.ends(f))
    if shared:
        return _bond_at_shared_vertex(con, min(shared), e, f)
    theta = find_theta(g, x1, y1, e, f)
    if theta.kind == TYPE_A:
        return _fan_from_type_a(con, theta, e, f)
    try:
        return _k4_pipeline(con, theta, e, f)
    except _Escape as esc:
        return _fan_from_type_a(con, esc.theta, e, f)


def _bond_at_shared_vertex(con: Contractor, s: int, e: int, f: int) -> ExtractionResult:
    g = con.graph
    rest = [d for d, (a, b) in g.edges.items() if s not in (a, b)]
    con.contract_edges(rest)
    h = con.graph
    if bond_size(h) is None:
        raise _violation("contracting G - x did not give a bond", con)
    return ExtractionResult(BOND, h, con.trace(), {"n": h.num_edges}, {"e": e, "f": f})


def _fan_from_type_a(con: Contractor, theta: ThetaGraph, e: int, f: int) -> ExtractionResult:
    """Contract the two unmarked theta paths, then shrink to a fan on their image."""
    g = con.graph
    paths = [list(p) for p in theta.paths]
    marked = next(i for i, p in enumerate(paths) if e in p and f in p)
    c_edges = [d for i, p in enumerate(paths) if i != marked for d in p]
    ex = g.other_end(e, theta.x) if theta.x in g.ends(e) else g.other_end(e, theta.y)
    fy = g.other_end(f, theta.y) if theta.y in g.ends(f) else g.other_end(f, theta.x)
    hub = theta.x
    con.contract(c_edges)
    h = con.graph
    others = [b for b in blocks(h) if e not in b]
    if not any(f in b for b in blocks(h) if e in b):
        raise _violation("marked edges lie in different blocks", con)
    for b in others:
        con.contract_edges(set(b) & set(con.graph.edges))
    c = con.image(hub)
    while True:
        cyc = find_cycle(con.graph, must_avoid_vertices=[c])
        if cyc is None:
            break
        con.contract(cyc)
    h = con.graph
    a, b = con.image(ex), con.image(fy)
    tree = h.delete_vertices([c])
    if a == b:
        keep = {a}
    else:
        found = internally_disjoint_paths(tree, [a], [b], 1)
        if found is None:
            raise _violation("fan path endpoints are disconnected", con)
        keep = set(found[0][0])
    while True:
        h = con.graph
        c = con.image(hub)
        leaves = sorted(v for v in h.vertices if v != c and v not in keep
                        and sum(1 for d in h.incident(v) if c not in h.ends(d)) <= 1)
        if not leaves:
            break
        leaf = leaves[0]
        spokes = sorted(h.edges_between(c, leaf))
        if len(spokes) < 2:
            raise _violation("leaf has fewer than two spokes", con, leaf=leaf)
        con.contract(spokes[:2])
    h = con.graph
    n = bond_size(h)
    if n is not None:
        return ExtractionResult(BOND, h, con.trace(), {"n": n}, {"e": e, "f": f})
    if not fan_outer_spokes_ok(h, e, f):
        raise _violation("fan pipeline did not end at a fan with outer spokes e, f", con)
    hub_v, path, ts = _fan_reading(h, e, f)
    return ExtractionResult(FAN_TYPE, h, con.trace(), {"ts": ts, "hub": hub_v, "path": path},
                            {"e": e, "f": f})


def _fan_reading(h: Multigraph, e: int, f: int):
    for c, path, ts in fan_decompositions(h):
        if c in h.ends(e) and c in h.ends(f) and len(path) >= 2:
            if h.other_end(e, c) == path[-1]:
                path, ts = path[::-1], ts[::-1]
            if h.other_end(e, c) == path[0]:
                return c, path, ts
    raise ValueError("no fan reading")


class _State:
    """The four-path connector tracked through contractions by original terminal ids."""

    def __init__(self, con: Contractor, e: int, f: int, orig: Dict[str, int], paths: Dict[int, List[int]]):
        self.con, self.e, self.f = con, e, f
        self.orig = orig
        self.raw = paths

    @property
    def g(self) -> Multigraph:
        return self.con.graph

    def t(self, name: str) -> int:
        return self.con.image(self.orig[name])

    def path(self, i: int) -> Path:
        live = [d for d in self.raw[i] if d in self.g.edges]
        self.raw[i] = live
        return walk(self.g, self.t(_ENDS[i][0]), live)

    def connector(self) -> FourPathConnector:
        return FourPathConnector({k: self.t(k) for k in self.orig}, {i: self.path(i) for i in self.raw})

    def vertices(self) -> set:
        out = {self.t(k) for k in self.orig}
        for i in self.raw:
            out |= set(self.path(i)[0])
        return out

    def edges(self) -> set:
        out = {self.e, self.f}
        for i in self.raw:
            out |= set(self.path(i)[1])
        return out

    def contract(self, cyc) -> None:
        self.con.contract(cyc)
        for i in self.raw:
            self.path(i)

    def theta(self, x: str, y: str, *ps: Path) -> ThetaGraph:
        th = ThetaGraph(self.t(x), self.t(y), tuple(tuple(p[1]) for p in ps), TYPE_A)
        if not th.is_valid(self.g):
            raise _violation("escape theta is malformed", self.con, theta=th)
        return th

    def edge_path(self, d: int, start: str) -> Path:
        return walk(self.g, self.t(start), [d])


def _k4_pipeline(con: Contractor, theta: ThetaGraph, e: int, f: int) -> ExtractionResult:
    g = con.graph
    x1, y1 = theta.x, theta.y
    x2, y2 = g.other_end(e, x1), g.other_end(f, y1)
    raw: Dict[int, List[int]] = {}
    for p in theta.paths:
        p = list(p)
        if e in p:
            raw[1] = p[1:]
        elif f in p:
            raw[3] = p[:-1]
        else:
            raw[2] = p
    st = _State(con, e, f, {"x1": x1, "x2": x2, "y1": y1, "y2": y2}, raw)
    _absorb_q_cycles(st)
    raw[4] = _fourth_path(st)[1]
    _span(st)
    _eliminate(st)
    h = con.graph
    th = find_type_a_theta(h, e, f)
    if th is not None:
        raise _Escape(th)
    if not k4_parallel_rule_ok(h, e, f):
        raise _violation("final graph breaks the K4 parallel rule", con)
    mult = {}
    for d, (a, b) in h.edges.items():
        key = (min(a, b), max(a, b))
        mult[key] = mult.get(key, 0) + 1
    return ExtractionResult(K4_EXT, h, con.trace(),
                            {"multiplicities": {f"{a}-{b}": m for (a, b), m in sorted(mult.items())}},
                            {"e": e, "f": f})


def _absorb_q_cycles(st: _State) -> None:
    """Contract cycles formed by an x2-P1 or y2-P3 path and a piece of that path."""
    while True:
        p1, p3 = st.path(1), st.path(2 + 1)
        stops, banned = st.vertices(), st.edges()
        x2, y2, y1, x1 = st.t("x2"), st.t("y2"), st.t("y1"), st.t("x1")
        best = None
        for start, home, bad in ((x2, 1, y1), (y2, 3, x1)):
            hp = p1 if home == 1 else p3
            for w, q in paths_to_stops(st.g, start, stops, banned).items():
                if w in hp[0] and w != start:
                    key = (len(q[1]), home, w)
                    if best is None or key < best[0]:
                        best = (key, start, home, w, q, bad)
        if best is None:
            return
        _, start, home, w, q, bad = best
        if w == bad:
            if home == 1:
                raise _Escape(st.theta("x2", "y1", join(st.edge_path(st.e, "x2"), p3, st.edge_path(st.f, "y2")),
                                       p1, q))
            raise _Escape(st.theta("x1", "y2", join(st.edge_path(st.e, "x1"), p1, st.edge_path(st.f, "y1")),
                                   p3, reverse(q)))
        hp = p1 if home == 1 else p3
        st.contract(set(q[1]) | set(segment(hp, start, w)[1]))


def _fourth_path(st: _State) -> Path:
    p1, p2, p3 = st.path(1), st.path(2), st.path(3)
    x1, x2, y1, y2 = (st.t(k) for k in ("x1", "x2", "y1", "y2"))
    stops, banned = st.vertices(), st.edges()
    from_x = paths_to_stops(st.g, x2, stops, banned)
    from_y = paths_to_stops(st.g, y2, stops, banned)
    for w, q in from_x.items():
        if w in p1[0]:
            raise _violation("x2-path into P1 survived absorption", st.con)
        if w in p2[0] and w != x1:
            raise _Escape(st.theta("x2", "y1", join(st.edge_path(st.e, "x2"), p3, st.edge_path(st.f, "y2")),
                                   p1, join(q, segment(p2, w, y1))))
    for w, q in from_y.items():
        if w in p3[0]:
            raise _violation("y2-path into P3 survived absorption", st.con)
        if w in p2[0] and w != y1:
            raise _Escape(st.theta("x1", "y2", join(st.edge_path(st.e, "x1"), p1, st.edge_path(st.f, "y1")),
                                   p3, join(segment(p2, x1, w), reverse(q))))
    px = [q for w, q in from_x.items() if w in p3[0] and w != x1]
    py = [q for w, q in from_y.items() if w in p1[0] and w != y1]
    if not px or not py:
        raise _violation("no connecting path for the fourth side", st.con)
    px_, py_ = px[0], py[0]
    if px_[0][-1] == y2:
        return px_
    if py_[0][-1] == x2:
        return reverse(py_)
    common = interior(px_) & interior(py_)
    if not common:
        a, b = px_[0][-1], py_[0][-1]
        raise _Escape(st.theta("x2", "y2", join(st.edge_path(st.e, "x2"), p2, st.edge_path(st.f, "y1")),
                               join(px_, segment(p3, a, y2)), join(segment(p1, x2, b), reverse(py_))))
    z = next(v for v in px_[0] if v in common)
    return join(segment(px_, x2, z), reverse(segment(py_, y2, z)))


def _adjacent(i: int, j: int) -> Optional[str]:
    if i == j or _OPPOSITE[i] == j:
        return None
    return (set(_ENDS[i]) & set(_ENDS[j])).pop()


def _span(st: _State) -> None:
    """Absorb vertices outside the connector until it spans the graph."""
    while True:
        outside = sorted(set(st.g.vertices) - st.vertices())
        if not outside:
            return
        v = outside[0]
        paths = internally_disjoint_paths(st.g, [v], st.vertices(), 3)
        if paths is None:
            raise _violation("fewer than three disjoint paths to the connector", st.con, v=v)
        paths = [(list(vs), list(es)) for vs, es in paths]
        ends = [p[0][-1] for p in paths]
        cands = []
        for i in range(3):
            for j in range(i + 1, 3):
                if ends[i] == ends[j]:
                    cands.append(set(paths[i][1]) | set(paths[j][1]))
        if not cands:
            cands = _span_cycles(st, paths)
        if not cands:
            raise _violation("no absorption cycle", st.con, v=v)
        st.contract(min(cands, key=lambda c: (len(c), sorted(c))))


def _span_cycles(st: _State, vpaths: List[Path]) -> List[set]:
    cons = {i: st.path(i) for i in st.raw}
    term = {k: st.t(k) for k in st.orig}
    out = []
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = vpaths[i][0][-1], vpaths[j][0][-1]
            for k, p in cons.items():
                if a in p[0] and b in p[0]:
                    if {a, b} == {term[_ENDS[k][0]], term[_ENDS[k][1]]}:
                        th = find_type_a_theta(st.g, st.e, st.f)
                        if th is None:
                            raise _violation("both ends of a path reached without a type-A theta", st.con)
                        raise _Escape(th)
                    out.append(set(vpaths[i][1]) | set(vpaths[j][1]) | set(segment(p, a, b)[1]))
    if out:
        return out
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = vpaths[i][0][-1], vpaths[j][0][-1]
            ka = [k for k, p in cons.items() if a in interior(p)]
            kb = [k for k, p in cons.items() if b in interior(p)]
            for k in ka:
                for m in kb:
                    z = _adjacent(k, m)
                    if z is None:
                        continue
                    zv = term[z]
                    out.append(set(vpaths[i][1]) | set(vpaths[j][1])
                               | set(segment(cons[k], a, zv)[1]) | set(segment(cons[m], zv, b)[1]))
    return out


def _eliminate(st: _State) -> None:
    """Contract interior vertices of the four paths into the terminals."""
    while True:
        term = {k: st.t(k) for k in st.orig}
        cons = {i: st.path(i) for i in st.raw}
        inner = sorted(v for p in cons.values() for v in interior(p))
        if not inner:
            return
        u = inner[0]
        k = next(i for i, p in cons.items() if u in interior(p))
        r_edges = st.edges()
        cands = []
        for d in sorted(st.g.incident(u)):
            if d in r_edges or st.g.is_loop(d):
                continue
            w = st.g.other_end(d, u)
            if w in cons[k][0]:
                cands.append({d} | set(segment(cons[k], w, u)[1]))
                continue
            for m, p in cons.items():
                z = _adjacent(k, m)
                if z is not None and w in interior(p):
                    cands.append({d} | set(segment(p, w, term[z])[1]) | set(segment(cons[k], term[z], u)[1]))
        if not cands:
            th = find_type_a_theta(st.g, st.e, st.f)
            if th is None:
                raise _violation("interior vertex cannot be eliminated", st.con, u=u)
            raise _Escape(th)
        st.contract(min(cands, key=lambda c: (len(c), sorted(c))))

"""Planar embeddings as rotation systems, dual graphs, and the induced-subgraph / cc-minor duality check."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .errors import CapExceeded, GraphError
from .isomorph import canonical_form, cc_minor_classes
from .multigraph import Multigraph, components, is_k_connected

EMBED_CAP = 12

Dart = Tuple[int, int]  # (edge id, which end: 0 or 1)


@dataclass(frozen=True)
class Embedding:
    """Clockwise rotation of darts at each vertex, plus the face boundaries they induce."""

    rotation: Dict[int, Tuple[Dart, ...]]
    faces: Tuple[Tuple[Dart, ...], ...]

    def face_edges(self) -> List[List[int]]:
        return [[e for e, _ in f] for f in self.faces]

    def to_json(self) -> dict:
        return {"rotation": {str(v): [list(d) for d in ds] for v, ds in sorted(self.rotation.items())},
                "faces": self.face_edges()}


def _dart_vertex(g: Multigraph, d: Dart) -> int:
    return g.ends(d[0])[d[1]]


def _trace_faces(g: Multigraph, rotation: Dict[int, Tuple[Dart, ...]]) -> Tuple[Tuple[Dart, ...], ...]:
    pos = {}
    for v, ds in rotation.items():
        for i, d in enumerate(ds):
            pos[d] = (v, i)
    seen, faces = set(), []
    for start in sorted(pos):
        if start in seen:
            continue
        face, d = [], start
        while d not in seen:
            seen.add(d)
            face.append(d)
            rev = (d[0], 1 - d[1])
            w, i = pos[rev]
            ring = rotation[w]
            d = ring[(i - 1) % len(ring)]
        faces.append(tuple(face))
    return tuple(faces)


def make_embedding(g: Multigraph, rotation: Dict[int, Tuple[Dart, ...]]) -> Embedding:
    darts = sorted(d for ds in rotation.values() for d in ds)
    want = sorted((e, s) for e in g.edges for s in (0, 1))
    if darts != want or set(rotation) != set(g.vertices):
        raise GraphError("embedding does not match graph")
    for v, ds in rotation.items():
        if any(_dart_vertex(g, d) != v for d in ds):
            raise GraphError("embedding does not match graph")
    return Embedding({v: tuple(ds) for v, ds in rotation.items()}, _trace_faces(g, rotation))


def euler_ok(g: Multigraph, emb: Embedding) -> bool:
    comps = [c for c in components(g)]
    return g.num_vertices - g.num_edges + len(emb.faces) == 1 + len(comps)


def planar_embed(g: Multigraph) -> Optional[Embedding]:
    """An embedding of ``g`` (by networkx on the twice-subdivided graph), or None if non-planar."""
    if g.num_vertices > EMBED_CAP:
        raise CapExceeded(f"more than {EMBED_CAP} vertices")
    sub = nx.Graph()
    sub.add_nodes_from(("v", v) for v in g.vertices)
    for e, (a, b) in g.edges.items():
        sub.add_edge(("v", a), ("d", e, 0))
        sub.add_edge(("d", e, 0), ("d", e, 1))
        sub.add_edge(("d", e, 1), ("v", b))
    ok, pe = nx.check_planarity(sub)
    if not ok:
        return None
    rotation = {}
    for v in sorted(g.vertices):
        node = ("v", v)
        rotation[v] = tuple((nb[1], nb[2]) for nb in pe.neighbors_cw_order(node)) if sub.degree(node) else ()
    emb = make_embedding(g, rotation)
    if len(components(g)) == 1 and not euler_ok(g, emb):
        raise GraphError("embedding fails Euler's formula")
    return emb


def dual(g: Multigraph, emb: Embedding) -> Tuple[Multigraph, Dict[int, int]]:
    """The dual graph (one vertex per face) and the primal-to-dual edge correspondence."""
    if not emb.faces and g.num_edges:
        raise GraphError("embedding does not match graph")
    face_of = {}
    for i, f in enumerate(emb.faces):
        for d in f:
            face_of[d] = i
    if set(face_of) != {(e, s) for e in g.edges for s in (0, 1)}:
        raise GraphError("embedding does not match graph")
    edges = {e: (face_of[(e, 0)], face_of[(e, 1)]) for e in g.edges}
    return Multigraph(range(max(1, len(emb.faces))), edges), {e: e for e in g.edges}


def restrict(g: Multigraph, emb: Embedding, vs) -> Tuple[Multigraph, Embedding]:
    """Induced subgraph on ``vs`` with the inherited embedding."""
    h = g.induced(vs)
    rot = {v: tuple(d for d in emb.rotation[v] if d[0] in h.edges) for v in h.vertices}
    return h, make_embedding(h, rot)


@dataclass
class DualityReport:
    ok: bool
    embedding: Optional[Embedding] = None
    offending: Optional[Multigraph] = None
    detail: str = ""
    induced_codes: set = field(default_factory=set)
    minor_codes: set = field(default_factory=set)

    def __bool__(self) -> bool:
        return self.ok


def check_duality_lemma(g: Multigraph) -> DualityReport:
    """Compare duals of 2-connected induced subgraphs with 2-connected cc-minors of the dual."""
    if g.has_loops() or not is_k_connected(g, 2):
        raise GraphError("requires a loopless 2-connected graph")
    emb = planar_embed(g)
    if emb is None:
        raise GraphError("graph is not planar")
    gd, _ = dual(g, emb)
    induced: Dict[bytes, Multigraph] = {}
    for k in range(2, g.num_vertices + 1):
        for vs in combinations(sorted(g.vertices), k):
            h, he = restrict(g, emb, vs)
            if not is_k_connected(h, 2):
                continue
            hd, _ = dual(h, he)
            if not is_k_connected(hd, 2):
                return DualityReport(False, emb, h, "dual of a 2-connected subgraph is not 2-connected")
            induced.setdefault(canonical_form(hd, cap=None), h)
    minors = {code for code, m in cc_minor_classes(gd).items() if is_k_connected(m, 2)}
    rep = DualityReport(set(induced) == minors, emb, induced_codes=set(induced), minor_codes=minors)
    if not rep.ok:
        extra = sorted(set(induced) - minors)
        rep.offending = induced[extra[0]] if extra else None
        rep.detail = "induced side has extra classes" if extra else "cc-minor side has extra classes"
    return rep

"""Cycle contraction, contraction traces, and the partition characterization of cc-minors."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError, TraceError
from .multigraph import (
    Multigraph,
    components,
    cut_edges,
    find_cycle,
    is_bridgeless_connected_edges,
    is_cycle,
)


def fingerprint(g: Multigraph) -> str:
    """Digest of the labelled graph (vertex ids and edge ids included)."""
    payload = repr((sorted(g.vertices), sorted(g.edges.items())))
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


def contract_cycle(g: Multigraph, c: Iterable[int]) -> Multigraph:
    """``g / c`` with every loop on the merged vertex deleted.

    The vertices of ``c`` are identified into the smallest of them.
    """
    c = frozenset(c)
    if not is_cycle(g, c):
        raise GraphError("not a cycle")
    return _identify(g, g.vertices_of(c))


def _identify(g: Multigraph, vs: FrozenSet[int]) -> Multigraph:
    m = min(vs)
    edges = {}
    for e, (a, b) in g.edges.items():
        if a in vs and b in vs:
            continue
        edges[e] = (m if a in vs else a, m if b in vs else b)
    return Multigraph((g.vertices - vs) | {m}, edges)


@dataclass(frozen=True)
class ContractionTrace:
    """Ordered cycle contractions replayable from the graph named by ``source``.

    ``loops[i]`` holds the edges that became loops (and were deleted) at step i.
    """

    source: str
    steps: Tuple[FrozenSet[int], ...] = ()
    loops: Tuple[FrozenSet[int], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def deleted_edges(self) -> FrozenSet[int]:
        out = set()
        for s in self.steps:
            out |= s
        for s in self.loops:
            out |= s
        return frozenset(out)

    def to_json(self) -> dict:
        return {"source": self.source, "steps": [sorted(s) for s in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def trace_from_json(doc: Mapping | str, source: Multigraph) -> ContractionTrace:
    """Parse a trace document and validate it by replaying against ``source``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    t = ContractionTrace(doc["source"], tuple(frozenset(s) for s in doc["steps"]))
    c = Contractor(source)
    if t.source != c.trace().source:
        raise TraceError("fingerprint mismatch")
    for i, s in enumerate(t.steps):
        if not is_cycle(c.graph, s):
            raise TraceError(f"step {i} is not a cycle")
        c.contract(s)
    return c.trace()


class Contractor:
    """Mutable builder that contracts cycles and records the trace.

    ``image(v)`` follows an original vertex to its current id.
    """

    def __init__(self, g: Multigraph):
        self.source = g
        self.graph = g
        self._fp = fingerprint(g)
        self._steps: List[FrozenSet[int]] = []
        self._loops: List[FrozenSet[int]] = []
        self._parent: Dict[int, int] = {v: v for v in g.vertices}

    def _find(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def image(self, v: int) -> int:
        return self._find(v)

    def contract(self, c: Iterable[int]) -> Multigraph:
        c = frozenset(c)
        g = self.graph
        if not is_cycle(g, c):
            raise GraphError("not a cycle")
        vs = g.vertices_of(c)
        loops = frozenset(e for e, (a, b) in g.edges.items() if e not in c and a in vs and b in vs)
        self.graph = _identify(g, vs)
        m = min(vs)
        for v in vs:
            self._parent[self._find(v)] = m
        self._parent[m] = m
        self._steps.append(c)
        self._loops.append(loops)
        return self.graph

    def contract_edges(self, f: Iterable[int]) -> Multigraph:
        """Contract a connected bridgeless edge set as a sequence of cycles."""
        remaining = set(f) & set(self.graph.edges)
        if not is_bridgeless_connected_edges(self.graph, remaining):
            raise GraphError("not 2-edge-connected")
        while remaining:
            e = min(remaining)
            c = find_cycle(self.graph, [e], avoid_edges=set(self.graph.edges) - remaining)
            if c is None:
                raise GraphError("not 2-edge-connected")
            before = set(self.graph.edges)
            self.contract(c)
            remaining -= before - set(self.graph.edges)
        return self.graph

    def contract_edge_components(self, z: Iterable[int]) -> Multigraph:
        """Contract every component of the subgraph formed by ``z``."""
        z = set(z) & set(self.graph.edges)
        while z:
            sub = self.graph.edge_subgraph(z)
            comp = min(components(sub), key=min)
            ids = {e for e in z if self.graph.ends(e)[0] in comp}
            self.contract_edges(ids)
            z &= set(self.graph.edges)
        return self.graph

    def fork(self) -> "Contractor":
        twin = Contractor.__new__(Contractor)
        twin.source, twin.graph, twin._fp = self.source, self.graph, self._fp
        twin._steps, twin._loops = list(self._steps), list(self._loops)
        twin._parent = dict(self._parent)
        return twin

    def trace(self) -> ContractionTrace:
        return ContractionTrace(self._fp, tuple(self._steps), tuple(self._loops))


def contract_subgraph(g: Multigraph, f: Iterable[int]) -> Tuple[Multigraph, ContractionTrace]:
    """Contract the 2-edge-connected subgraph formed by ``f``; returns the trace witnessing it."""
    f = set(f)
    if any(e not in g.edges for e in f):
        raise GraphError("edge not in graph")
    sub = g.edge_subgraph(f)
    if not f or len(components(sub)) != 1 or cut_edges(sub):
        raise GraphError("not 2-edge-connected")
    c = Contractor(g)
    c.contract_edges(f)
    return c.graph, c.trace()


def contract_to_kept(g: Multigraph, kept: Iterable[int]) -> Tuple[Multigraph, ContractionTrace]:
    """The cc-minor of ``g`` whose surviving edges are exactly ``kept``.

    Every component of the deleted edge set must be 2-edge-connected.
    """
    kept = set(kept)
    c = Contractor(g)
    c.contract_edge_components(set(g.edges) - kept)
    if set(c.graph.edges) != kept & set(g.edges):
        raise GraphError("kept edges did not survive contraction")
    return c.graph, c.trace()


def replay(source: Multigraph, t: ContractionTrace) -> Multigraph:
    if t.source != fingerprint(source):
        raise TraceError("fingerprint mismatch")
    g = source
    for i, s in enumerate(t.steps):
        if not is_cycle(g, s):
            raise TraceError(f"step {i} is not a cycle")
        if t.loops:
            vs = g.vertices_of(s)
            loops = frozenset(e for e, (a, b) in g.edges.items() if e not in s and a in vs and b in vs)
            if loops != t.loops[i]:
                raise TraceError(f"step {i} loop record mismatch")
        g = _identify(g, g.vertices_of(s))
    return g


def concat(first: ContractionTrace, second: ContractionTrace, mid: Multigraph) -> ContractionTrace:
    """Chain two traces; ``second`` must start from ``mid`` (the result of ``first``)."""
    if second.source != fingerprint(mid):
        raise TraceError("traces do not chain")
    return ContractionTrace(first.source, first.steps + second.steps, first.loops + second.loops)


def lift_trace(t: ContractionTrace, host: Multigraph) -> ContractionTrace:
    """Re-issue a trace against ``host`` when every step is also a cycle there.

    Used when a trace is computed on a subgraph whose contracted cycles meet the
    rest of ``host`` only where the contraction creates no new loops.
    """
    c = Contractor(host)
    for s in t.steps:
        c.contract(s)
    return c.trace()


@dataclass
class CcPartition:
    """Disjoint source subgraphs (one per target vertex) and the crossing-edge correspondence."""

    parts: Dict[int, Tuple[FrozenSet[int], FrozenSet[int]]]
    crossing: Dict[int, int] = field(default_factory=dict)


def verify_partition(source: Multigraph, target: Multigraph, p: CcPartition) -> Tuple[bool, str]:
    """Check the structural characterization of ``target`` as a cc-minor of ``source``."""
    if set(p.parts) != set(target.vertices):
        return False, "parts do not match target vertices"
    seen_v: set = set()
    seen_e: set = set()
    owner = {}
    for tv, (vs, es) in sorted(p.parts.items()):
        vs, es = frozenset(vs), frozenset(es)
        if not vs:
            return False, f"part {tv} is empty"
        if vs & seen_v or es & seen_e:
            return False, f"part {tv} overlaps another part"
        if any(v not in source.vertices for v in vs) or any(e not in source.edges for e in es):
            return False, f"part {tv} references unknown ids"
        if not source.vertices_of(es) <= vs:
            return False, f"part {tv} edges leave its vertex set"
        if len(vs) == 1:
            if any(not source.is_loop(e) for e in es):
                return False, f"part {tv} is not a subgraph"
        else:
            sub = Multigraph(vs, {e: source.ends(e) for e in es})
            if len(components(sub)) != 1 or cut_edges(sub):
                return False, f"part {tv} is neither a single vertex nor 2-edge-connected"
        seen_v |= vs
        seen_e |= es
        for v in vs:
            owner[v] = tv
    if seen_v != set(source.vertices):
        return False, "parts do not cover the source vertices"
    if set(p.crossing) != set(target.edges):
        return False, "crossing map does not cover target edges"
    used = set(p.crossing.values())
    if len(used) != len(p.crossing):
        return False, "crossing map is not injective"
    if used != set(source.edges) - seen_e:
        return False, "crossing edges are not the complement of the parts"
    for te, se in p.crossing.items():
        a, b = target.ends(te)
        x, y = source.ends(se)
        if {owner[x], owner[y]} != {a, b} or (a == b) != (owner[x] == owner[y]):
            return False, f"edge {te} endpoints do not match parts"
    return True, "ok"

"""Edge-connectivity classes F_k and constructive obstructions to membership.

F_1 is the loopless connected graphs; for k >= 2, F_k is the loopless
k-edge-connected graphs together with K_1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .ccops import ContractionTrace, Contractor
from .errors import GraphError, TheoremViolation
from .io import graph_to_json
from .multigraph import (Multigraph, components, cut_edges, edge_connectivity, find_cycle, is_connected, is_forest,
                         is_tree, min_edge_cut)

K_CAP = 8

FOREST = "ForestMultiComponent"
TREE = "TreeWithEdge"
CYCLE = "CycleGe2"
BOND = "BondKMinus1"


@dataclass(frozen=True)
class Obstruction:
    kind: str
    level: int
    graph: Multigraph
    trace: ContractionTrace

    def to_json(self) -> dict:
        return {"kind": self.kind, "level": self.level, "graph": graph_to_json(self.graph),
                "trace": self.trace.to_json()}


@dataclass(frozen=True)
class ClassVerdict:
    max_k: int
    k_max: int
    obstruction: Optional[Obstruction] = None

    def to_json(self) -> dict:
        return {"max_k": self.max_k, "k_max": self.k_max,
                "obstruction": None if self.obstruction is None else self.obstruction.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def in_class(g: Multigraph, k: int) -> bool:
    if k < 1:
        raise GraphError("k must be positive")
    if g.has_loops() or g.num_vertices == 0:
        return False
    if k == 1:
        return is_connected(g)
    if g.num_vertices == 1:
        return True
    return edge_connectivity(g) >= k


def membership(g: Multigraph, k_max: int) -> int:
    """Largest k <= k_max with g in F_k, or 0."""
    if g.num_vertices == 1 and not g.has_loops():
        return k_max
    if not in_class(g, 1):
        return 0
    lam = edge_connectivity(g)
    return min(max(lam, 1), k_max)


def _contract_avoiding(con: Contractor, keep: Iterable[int]) -> None:
    keep = set(keep)
    while True:
        c = find_cycle(con.graph, avoid_edges=keep)
        if c is None:
            return
        con.contract(c)


def obstruction_kind_ok(h: Multigraph, kind: str, level: int) -> bool:
    """Does ``h`` have the named obstruction shape (and so lie outside F_level)?"""
    if h.has_loops():
        return False
    if kind == FOREST:
        return is_forest(h) and len(components(h)) >= 2
    if kind == TREE:
        return is_tree(h) and h.num_edges >= 1
    if kind == CYCLE:
        return (h.num_edges >= 2 and is_connected(h) and h.num_vertices == h.num_edges
                and all(h.degree(v) == 2 for v in h.vertices))
    if kind == BOND:
        return h.num_vertices == 2 and h.num_edges == level - 1
    return False


def obstruction(g: Multigraph, k: int) -> Obstruction:
    """A cc-minor of ``g`` witnessing g not in F_k, assuming g is in F_{k-1}."""
    con = Contractor(g)
    if k == 1:
        _contract_avoiding(con, ())
        kind = FOREST
    elif k == 2:
        _contract_avoiding(con, ())
        kind = TREE
    elif k == 3:
        cut = [e for e in min_edge_cut(g)]
        _contract_avoiding(con, cut)
        kind = CYCLE
    else:
        cut = sorted(min_edge_cut(g))
        if len(cut) != k - 1:
            raise GraphError("graph is not in F_{k-1} minus F_k")
        _contract_avoiding(con, cut)
        h = con.graph
        if h.num_vertices != 2:
            raise TheoremViolation("cut sides did not collapse to single vertices", {"graph": h, "k": k})
        kind = BOND
    h = con.graph
    if not obstruction_kind_ok(h, kind, k):
        raise TheoremViolation("obstruction has the wrong shape", {"graph": h, "kind": kind, "k": k})
    return Obstruction(kind, k, h, con.trace())


def classify(g: Multigraph, k_max: int = K_CAP) -> ClassVerdict:
    """Largest class index up to ``k_max`` and, below that bound, the first obstruction."""
    if k_max < 1:
        raise GraphError("k_max must be positive")
    if k_max > K_CAP:
        raise GraphError(f"k_max above cap {K_CAP}")
    if g.has_loops():
        raise GraphError("graph has loops")
    if g.num_vertices == 0:
        raise GraphError("empty graph")
    k = membership(g, k_max)
    if k >= k_max:
        return ClassVerdict(k, k_max)
    if k == 1 and not cut_edges(g):
        raise TheoremViolation("connected graph outside F_2 has no cut edge", {"graph": g})
    return ClassVerdict(k, k_max, obstruction(g, k + 1))

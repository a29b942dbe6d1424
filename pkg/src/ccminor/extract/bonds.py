"""Parallel connections of cycles through a fixed edge, and bonds in 3-edge-connected graphs."""

from __future__ import annotations

from typing import Optional

from ..ccops import Contractor
from ..errors import GraphError, TheoremViolation
from ..multigraph import Multigraph, edge_connectivity, find_cycle, is_two_edge_connected
from .result import BOND, PAR_CYCLES, ExtractionResult
from .shapes import parallel_cycles_ok


def _cycle_missing_an_end(g: Multigraph, u: int, v: int):
    cands = [c for c in (find_cycle(g, must_avoid_vertices=[u]), find_cycle(g, must_avoid_vertices=[v])) if c]
    if not cands:
        return None
    return min(cands, key=lambda c: (len(c), sorted(c)))


def contract_to_parallel_cycles(con: Contractor, e: int) -> None:
    """Contract cycles missing an end of ``e`` until every cycle contains both ends."""
    while True:
        u, v = con.graph.ends(e)
        c = _cycle_missing_an_end(con.graph, u, v)
        if c is None:
            return
        con.contract(c)


def extract_parallel_cycles(g: Multigraph, e: int, con: Optional[Contractor] = None) -> ExtractionResult:
    """A cc-minor that is a parallel connection of cycles with basepoint ``e``."""
    if e not in g.edges or g.is_loop(e):
        raise GraphError("e must be a non-loop edge")
    if not is_two_edge_connected(g):
        raise GraphError("not 2-edge-connected")
    con = con or Contractor(g)
    contract_to_parallel_cycles(con, e)
    h = con.graph
    n = parallel_cycles_ok(h, e)
    if n is None:
        raise TheoremViolation("residual graph is not a parallel connection of cycles", {"graph": h, "e": e})
    u, v = h.ends(e)
    return ExtractionResult(PAR_CYCLES, h, con.trace(), {"cycles": n, "ends": [u, v]}, {"e": e})


def extract_bond(g: Multigraph, e: int) -> ExtractionResult:
    """A bond graph B_n (n >= 3) containing ``e`` as a cc-minor of a 3-edge-connected graph.

    The parallel-connection residue of a 3-edge-connected graph has no
    degree-2 vertices, so it is already a bond.
    """
    if e not in g.edges or g.is_loop(e):
        raise GraphError("e must be a non-loop edge")
    if g.num_vertices < 2 or edge_connectivity(g) < 3:
        raise GraphError("not 3-edge-connected")
    res = extract_parallel_cycles(g, e)
    h = res.graph
    if h.num_vertices != 2 or h.num_edges < 3:
        raise TheoremViolation("3-edge-connected residue is not a bond", {"graph": h, "e": e})
    return ExtractionResult(BOND, h, res.trace, {"n": h.num_edges}, {"e": e})

"""Exhaustive and seeded sweeps that back the acceptance criteria.

Each suite is a stream of items plus a checker returning None on success or
a short failure description.  ``run_suite`` fans items out over processes.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import networkx as nx

from .ccops import contract_cycle, replay
from .classes import BOND as OB_BOND, CYCLE, FOREST, TREE, classify, in_class, obstruction_kind_ok
from .decompose import B3, K3, check_parallel_path_extension, compose, tutte_decomposition
from .duality import check_duality_lemma, planar_embed
from .errors import TheoremViolation
from .extract import (BOND, FAN_TYPE, K4_EXT, extract_bond, extract_from_3connected, extract_parallel_cycles,
                      extract_template, f_wt, find_type_a_theta, is_witness, weighted_tree_witness)
from .extract.shapes import bond_size, fan_outer_spokes_ok, k4_parallel_rule_ok, parallel_cycles_ok
from .gen import (bond, cycle, enumerate_2connected, enumerate_2edge_connected, enumerate_multigraphs,
                  enumerate_simple_3connected, random_2connected, random_k_edge_connected,
                  random_parallel_path_extension, random_template_spec)
from .decompose import build_template
from .io import graph_from_json
from .isomorph import cc_minor_classes, is_cc_minor
from .multigraph import Multigraph, edge_connectivity, is_k_connected, is_two_edge_connected, iter_cycles


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.total > 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.total - self.failed}/{self.total} passed in {self.seconds:.1f}s"


# -- closure under cycle contraction -------------------------------------------

def _closure_items():
    return enumerate_2connected(8, loopless=True)


def _closure_check(g: Multigraph) -> Optional[str]:
    for c in iter_cycles(g):
        h = contract_cycle(g, c)
        if h.num_vertices > 1 and not is_two_edge_connected(h):
            return f"contracting {sorted(c)} in {sorted(g.edges.items())} is not 2-edge-connected"
    return None


# -- k-edge-connectivity is preserved ------------------------------------------

def _preserve_items():
    return range(500)


def _preserve_check(seed: int) -> Optional[str]:
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    g = random_k_edge_connected(n, 3, seed=seed, extra_edges=rng.randint(0, n))
    if edge_connectivity(g) < 3:
        return f"seed {seed}: generator gave a graph below 3-edge-connectivity"
    h = g
    for _ in range(rng.randint(1, 4)):
        cycles = list(itertools.islice(iter_cycles(h), 300))
        if not cycles:
            break
        h = contract_cycle(h, rng.choice(cycles))
        if h.num_vertices >= 2 and edge_connectivity(h) < 3:
            return f"seed {seed}: contraction dropped below 3-edge-connectivity"
    return None


# -- parallel connections of cycles and bonds ----------------------------------

def _bonds_items():
    return enumerate_2edge_connected(8, loopless=False)


def _bonds_check(g: Multigraph) -> Optional[str]:
    strong = g.num_vertices >= 2 and edge_connectivity(g) >= 3
    for e in sorted(g.edges):
        if g.is_loop(e):
            continue
        res = extract_parallel_cycles(g, e)
        if parallel_cycles_ok(res.graph, e) is None or not res.replays(g):
            return f"parallel cycles failed for e={e} on {sorted(g.edges.items())}"
        if strong:
            b = extract_bond(g, e)
            n = bond_size(b.graph)
            if n is None or n < 3 or e not in b.graph.edges or not b.replays(g) or edge_connectivity(b.graph) < 3:
                return f"bond failed for e={e} on {sorted(g.edges.items())}"
    return None


# -- the 3-connected taxonomy --------------------------------------------------

def _taxonomy_items():
    return enumerate_simple_3connected(7)


def check_taxonomy(g: Multigraph, e: int, f: int) -> Optional[str]:
    try:
        res = extract_from_3connected(g, e, f)
    except TheoremViolation as ex:
        return f"theorem violation on e={e}, f={f}: {ex}"
    h = res.graph
    if e not in h.edges or f not in h.edges or not res.replays(g):
        return f"marks or replay broken for e={e}, f={f}"
    if res.kind == BOND:
        ok = (bond_size(h) or 0) >= 3
    elif res.kind == FAN_TYPE:
        ok = fan_outer_spokes_ok(h, e, f)
    elif res.kind == K4_EXT:
        ok = k4_parallel_rule_ok(h, e, f) and find_type_a_theta(h, e, f) is None
    else:
        ok = False
    return None if ok else f"shape check failed for {res.kind} e={e}, f={f}"


def _taxonomy_check(g: Multigraph) -> Optional[str]:
    for e, f in itertools.combinations(sorted(g.edges), 2):
        bad = check_taxonomy(g, e, f)
        if bad:
            return f"{bad} on {sorted(g.edges.items())}"
    return None


# -- duality -------------------------------------------------------------------

def _duality_items():
    from networkx.generators.atlas import graph_atlas_g
    for G in graph_atlas_g():
        if 2 <= G.number_of_nodes() <= 6 and nx.is_connected(G):
            g = Multigraph(G.nodes, [(i, a, b) for i, (a, b) in enumerate(G.edges)])
            if is_k_connected(g, 2) and planar_embed(g) is not None:
                yield g
    for g in enumerate_2connected(8, loopless=True):
        if g.num_vertices <= 6 and not g.is_simple() and planar_embed(g) is not None:
            yield g


def _duality_check(g: Multigraph) -> Optional[str]:
    rep = check_duality_lemma(g)
    return None if rep.ok else f"{rep.detail} on {sorted(g.edges.items())}"


# -- F_k classes against brute force -------------------------------------------

def brute_max_k(g: Multigraph, k_max: int) -> int:
    """Largest k <= k_max such that no cc-minor of ``g`` is an obstruction of level <= k."""
    minors = list(cc_minor_classes(g).values())
    levels = [(1, FOREST), (2, TREE), (3, CYCLE)] + [(k, OB_BOND) for k in range(4, k_max + 1)]
    best = 0
    for k, kind in levels:
        if k > k_max:
            break
        if any(obstruction_kind_ok(m, kind, k) for m in minors):
            return best
        best = k
    return best


def _classes_items():
    return enumerate_multigraphs(8)


def _classes_check(g: Multigraph) -> Optional[str]:
    v = classify(g, 4)
    want = brute_max_k(g, 4)
    if v.max_k != want:
        return f"classify says {v.max_k}, brute force {want} on {sorted(g.edges.items())}"
    ob = v.obstruction
    if ob is not None:
        if replay(g, ob.trace) != ob.graph or not obstruction_kind_ok(ob.graph, ob.kind, ob.level):
            return f"bad certificate {ob.kind} on {sorted(g.edges.items())}"
        if in_class(ob.graph, ob.level):
            return f"certificate lies inside F_{ob.level}"
    return None


# -- weighted trees ------------------------------------------------------------

def _trees(max_n: int = 7):
    yield Multigraph([0], {})
    for n in range(2, max_n + 1):
        for T in nx.nonisomorphic_trees(n):
            yield Multigraph(T.nodes, [(i, a, b) for i, (a, b) in enumerate(sorted(T.edges))])


def _compositions(total: int, parts: int):
    """Ordered ways to write ``total`` as ``parts`` non-negative integers (stars and bars)."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield out


def _witness_items():
    for t in (2, 3):
        for tree in _trees(7):
            yield (t, tree)


def _witness_check(item: Tuple[int, Multigraph]) -> Optional[str]:
    t, tree = item
    vs = sorted(tree.vertices)
    bound = f_wt(t)
    for total in range(bound + 1, bound + 4):
        for ws in _compositions(total, len(vs)):
            w = dict(zip(vs, ws))
            wit = weighted_tree_witness(tree, w, t)
            if not is_witness(tree, w, t, wit):
                return f"invalid witness {wit} for t={t}, w={w}"
    return None


# -- decomposition round trip --------------------------------------------------

def _roundtrip_items():
    for g in enumerate_2connected(9, loopless=True):
        yield ("any", g)
    for n in range(3, 13):
        yield ("cycle", cycle(n))
        yield ("bond", bond(n))


def _roundtrip_check(item) -> Optional[str]:
    family, g = item
    td = tutte_decomposition(g)
    td.validate()
    if compose(td) != g:
        return f"compose mismatch on {sorted(g.edges.items())}"
    tags = [node.tag for node in td.nodes.values()]
    n = g.num_edges
    if family == "cycle" and tags != [K3] * (n - 2):
        return f"C_{n} gave {tags}"
    if family == "bond" and tags != [B3] * (n - 2):
        return f"B_{n} gave {tags}"
    return None


# -- template round trip -------------------------------------------------------

def _template_items():
    return range(200)


def template_case(seed: int) -> Tuple[Multigraph, int]:
    rng = random.Random(seed)
    spec = random_template_spec(rng, 3, 8)
    g = random_parallel_path_extension(build_template(spec), rng, 60)
    return g, spec.r


def _template_check(seed: int) -> Optional[str]:
    g, r = template_case(seed)
    res = extract_template(g, r)
    if not res.ok:
        return f"seed {seed}: {res.params.get('reason')}"
    core = graph_from_json(res.params["core"])
    if res.params["parts"] < r or not res.replays(g):
        return f"seed {seed}: too few parts or bad replay"
    if not check_parallel_path_extension(res.graph, core, {v: v for v in core.vertices}):
        return f"seed {seed}: output is not a parallel-path extension of the core"
    return None


# -- oracle against a naive search ---------------------------------------------

def _to_nx(g: Multigraph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges.values())
    return G


def naive_cc_minor(g: Multigraph, h: Multigraph) -> bool:
    """Plain recursion over every cycle with no memo, comparing by networkx isomorphism."""
    target = _to_nx(h)

    def rec(cur: Multigraph) -> bool:
        if cur.num_edges < h.num_edges or cur.num_vertices < h.num_vertices:
            return False
        if cur.num_edges == h.num_edges and cur.num_vertices == h.num_vertices:
            if nx.is_isomorphic(_to_nx(cur), target):
                return True
        return any(rec(contract_cycle(cur, c)) for c in iter_cycles(cur))

    return rec(g)


def oracle_pair(seed: int) -> Tuple[Multigraph, Multigraph]:
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    m = rng.randint(max(n, 2), 10)
    g = random_2connected(n, m, seed=seed)
    if rng.random() < 0.5:
        h = g
        for _ in range(rng.randint(1, 2)):
            cycles = list(iter_cycles(h))
            if not cycles:
                break
            h = contract_cycle(h, rng.choice(cycles))
    else:
        n2 = rng.randint(1, n)
        m2 = rng.randint(max(n2, 1), max(n2, m - 1))
        h = random_2connected(n2, m2, seed=seed + 1) if n2 >= 2 else Multigraph([0], {})
    return g, h


def _oracle_items():
    return range(100)


def _oracle_check(seed: int) -> Optional[str]:
    g, h = oracle_pair(seed)
    tr = is_cc_minor(g, h)
    naive = naive_cc_minor(g, h)
    if (tr is not None) != naive:
        return f"seed {seed}: oracle {tr is not None}, naive {naive}"
    if tr is not None and not nx.is_isomorphic(_to_nx(replay(g, tr)), _to_nx(h)):
        return f"seed {seed}: certificate does not replay to the target"
    return None


SUITES: Dict[str, Tuple[str, Callable[[], Iterable], Callable]] = {
    "lemma41": ("contraction keeps 2-connected graphs 2-edge-connected", _closure_items, _closure_check),
    "lemma32": ("contraction keeps 3-edge-connectivity", _preserve_items, _preserve_check),
    "bonds": ("parallel-cycle and bond extractors", _bonds_items, _bonds_check),
    "thm61": ("3-connected two-edge taxonomy", _taxonomy_items, _taxonomy_check),
    "duality": ("induced subgraphs versus dual cc-minors", _duality_items, _duality_check),
    "thm52": ("F_k classes versus brute force", _classes_items, _classes_check),
    "witness": ("weighted-tree witnesses", _witness_items, _witness_check),
    "roundtrip": ("tree decomposition round trip", _roundtrip_items, _roundtrip_check),
    "template": ("template extraction round trip", _template_items, _template_check),
    "oracle": ("oracle versus naive search", _oracle_items, _oracle_check),
}


def _guarded(check: Callable, item) -> Optional[str]:
    try:
        return check(item)
    except Exception as ex:  # report, do not abort the sweep
        return f"{type(ex).__name__}: {ex}"


def run_suite(name: str, jobs: int = 1, limit: Optional[int] = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    _, items, check = SUITES[name]
    stream = items()
    if limit is not None:
        stream = itertools.islice(stream, limit)
    out = SuiteResult(name)
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_guarded, itertools.repeat(check), stream, chunksize=4))
    else:
        results = [_guarded(check, item) for item in stream]
    out.total = len(results)
    for r in results:
        if r is not None:
            out.failed += 1
            if len(out.failures) < 5:
                out.failures.append(r)
    out.seconds = time.perf_counter() - start
    return out

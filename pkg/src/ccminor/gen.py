"""Named graph families and exhaustive enumeration of small multigraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from .decompose import TemplateSpec, build_template
from .errors import CapExceeded, GraphError
from .isomorph import canonical_form
from .multigraph import Multigraph, components, edge_connectivity, min_edge_cut

ENUM_CAP = 9


@dataclass(frozen=True)
class Fan:
    n: int


@dataclass(frozen=True)
class FanType:
    ts: Tuple[int, ...]


@dataclass(frozen=True)
class Bond:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Wheel:
    k: int


@dataclass(frozen=True)
class Ladder:
    k: int


@dataclass(frozen=True)
class Vk:
    k: int


@dataclass(frozen=True)
class K3k:
    k: int


@dataclass(frozen=True)
class Template:
    spec: TemplateSpec


@dataclass(frozen=True)
class ParallelExtension:
    base: Multigraph
    mult: Mapping[int, int]


@dataclass(frozen=True)
class ParallelPathExtension:
    base: Multigraph
    lengths: Mapping[int, Sequence[int]]


@dataclass(frozen=True)
class Random2Connected:
    n: int
    m: int
    seed: int = 0


FamilySpec = Union[Fan, FanType, Bond, Cycle, Wheel, Ladder, Vk, K3k, Template, ParallelExtension,
                   ParallelPathExtension, Random2Connected]


def fan_type(ts: Sequence[int]) -> Multigraph:
    """Hub 0 and path 1..n; spoke i is ``ts[i-1]`` parallel edges.  Spokes come first."""
    ts = list(ts)
    if not ts or any(t < 1 for t in ts):
        raise GraphError("fan-type multiplicities must be positive")
    pairs = [(0, i + 1) for i, t in enumerate(ts) for _ in range(t)]
    pairs += [(i, i + 1) for i in range(1, len(ts))]
    return Multigraph.from_pairs(pairs, len(ts) + 1)


def fan(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("fan needs n >= 1")
    return fan_type([1] * n)


def bond(n: int) -> Multigraph:
    if n < 2:
        raise GraphError("bond needs n >= 2")
    return Multigraph.from_pairs([(0, 1)] * n, 2)


def cycle(n: int) -> Multigraph:
    if n < 2:
        raise GraphError("cycle needs n >= 2")
    return Multigraph.from_pairs([(i, (i + 1) % n) for i in range(n)], n)


def wheel(k: int) -> Multigraph:
    """Hub 0, rim 1..k; spokes first, then rim edges."""
    if k < 3:
        raise GraphError("wheel needs k >= 3")
    pairs = [(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)]
    return Multigraph.from_pairs(pairs, k + 1)


def ladder(k: int) -> Multigraph:
    """Rails v_i = i and u_i = k + i (0-based), rungs v_i u_i."""
    if k < 2:
        raise GraphError("ladder needs k >= 2")
    pairs = [(i, i + 1) for i in range(k - 1)] + [(k + i, k + i + 1) for i in range(k - 1)]
    pairs += [(i, k + i) for i in range(k)]
    return Multigraph.from_pairs(pairs, 2 * k)


def vk(k: int) -> Multigraph:
    """The ladder with ``v_1 v_k`` added and the two end rungs contracted."""
    if k < 3:
        raise GraphError("V_k needs k >= 3")
    lad = ladder(k)
    extra = lad.add_edges({lad.next_edge_id(): (0, k - 1)})
    # contracting the end rungs merges u_1 into v_1 and u_k into v_k
    rungs = {e for e, (a, b) in extra.edges.items() if {a, b} in ({0, k}, {k - 1, 2 * k - 1})}
    g = extra.delete_edges(rungs).relabel_vertices({k: 0, 2 * k - 1: k - 1})
    return _dense(g)


def _dense(g: Multigraph) -> Multigraph:
    order = {v: i for i, v in enumerate(sorted(g.vertices))}
    return Multigraph.from_pairs([(order[a], order[b]) for a, b in g.edges.values()], len(order))


def k3k(k: int) -> Multigraph:
    """Parts {0, 1, 2} and {3 .. k+2}."""
    if k < 1:
        raise GraphError("K_{3,k} needs k >= 1")
    return Multigraph.from_pairs([(a, 3 + j) for j in range(k) for a in range(3)], k + 3)


def parallel_extension(base: Multigraph, mult: Mapping[int, int]) -> Multigraph:
    """Edge e becomes ``mult.get(e, 1)`` parallel edges; the first copy keeps e's id."""
    nxt = base.next_edge_id()
    edges = dict(base.edges)
    for e in sorted(base.edges):
        if base.is_loop(e):
            continue
        m = mult.get(e, 1)
        if m < 1:
            raise GraphError("multiplicities must be positive")
        for _ in range(m - 1):
            edges[nxt] = base.ends(e)
            nxt += 1
    return Multigraph(base.vertices, edges)


def parallel_path_extension(base: Multigraph, lengths: Mapping[int, Sequence[int]]) -> Multigraph:
    """Edge e becomes internally disjoint paths of the listed lengths (default ``[1]``).

    Base vertices keep their ids; a length-1 path listed first keeps e's id.
    """
    nxt_e = base.next_edge_id()
    nxt_v = 1 + max(base.vertices, default=-1)
    vs = set(base.vertices)
    edges = {e: uv for e, uv in base.edges.items() if base.is_loop(e)}
    for e in sorted(base.edges):
        if base.is_loop(e):
            continue
        a, b = base.ends(e)
        ls = list(lengths.get(e, [1]))
        if not ls or any(x < 1 for x in ls):
            raise GraphError("path lengths must be positive and non-empty")
        for i, ln in enumerate(ls):
            chain = [a] + list(range(nxt_v, nxt_v + ln - 1)) + [b]
            nxt_v += ln - 1
            vs.update(chain)
            for j in range(ln):
                if i == 0 and ln == 1:
                    eid = e
                else:
                    eid = nxt_e
                    nxt_e += 1
                edges[eid] = (chain[j], chain[j + 1])
    return Multigraph(vs, edges)


def random_parallel_path_extension(base: Multigraph, rng: "random.Random", max_edges: int = 60,
                                   tries: int = 6) -> Multigraph:
    """Randomly stretch and multiply edges of ``base`` while staying within ``max_edges``."""
    lengths: Dict[int, List[int]] = {}
    ids = sorted(e for e in base.edges if not base.is_loop(e))
    size = base.num_edges
    for _ in range(tries):
        if not ids:
            break
        e = rng.choice(ids)
        cur = list(lengths.get(e, [1]))
        ln = rng.randint(1, 3)
        if rng.random() < 0.5:
            cur.append(ln)
        else:
            cur[0] += ln
        grown = size - sum(lengths.get(e, [1])) + sum(cur)
        if grown <= max_edges:
            lengths[e] = cur
            size = grown
    return parallel_path_extension(base, lengths)


def random_2connected(n: int, m: int, seed: int = 0, simple: bool = False) -> Multigraph:
    """Seeded ear growth: a random cycle, then ``m - n`` open ears."""
    if n < 2 or m < n or (n == 2 and m < 2):
        raise GraphError("need n >= 2 and m >= n")
    rng = random.Random(seed)
    ears = m - n
    n0 = n if ears == 0 else rng.randint(2 if not simple else min(3, n), n)
    if simple and n0 < 3:
        raise GraphError("simple graphs need a cycle of length >= 3")
    extra = [0] * ears
    for _ in range(n - n0):
        extra[rng.randrange(ears)] += 1
    pairs = [(i, (i + 1) % n0) for i in range(n0)]
    nv = n0
    present = {tuple(sorted(p)) for p in pairs}
    for j in range(ears):
        for _attempt in range(100):
            a, b = rng.sample(range(nv), 2)
            if not simple or extra[j] > 0 or tuple(sorted((a, b))) not in present:
                break
        else:
            raise GraphError("could not place a simple ear")
        chain = [a] + list(range(nv, nv + extra[j])) + [b]
        nv += extra[j]
        for x, y in zip(chain, chain[1:]):
            pairs.append((x, y))
            present.add(tuple(sorted((x, y))))
    return Multigraph.from_pairs(pairs, nv)


def random_k_edge_connected(n: int, k: int, seed: int = 0, extra_edges: int = 0) -> Multigraph:
    """Random loopless graph on ``n`` vertices with edge connectivity at least ``k``.

    Starts from a random 2-connected graph and adds edges across minimum cuts.
    """
    rng = random.Random(seed)
    g = random_2connected(n, n + extra_edges, seed=rng.randrange(1 << 30))
    while edge_connectivity(g) < k:
        cut = min_edge_cut(g)
        side = components(g.delete_edges(cut))
        a_side = sorted(side[0])
        b_side = sorted(set(g.vertices) - side[0])
        a, b = rng.choice(a_side), rng.choice(b_side)
        g = g.add_edges({g.next_edge_id(): (a, b)})
    return g


def random_template_spec(rng: random.Random, r_min: int = 3, r_max: int = 8) -> TemplateSpec:
    r = rng.randint(r_min, r_max)
    return TemplateSpec(tuple(rng.choice(("K3", "B3", "K4")) for _ in range(r)))


def generate(spec: FamilySpec) -> Multigraph:
    if isinstance(spec, Fan):
        return fan(spec.n)
    if isinstance(spec, FanType):
        return fan_type(spec.ts)
    if isinstance(spec, Bond):
        return bond(spec.n)
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Wheel):
        return wheel(spec.k)
    if isinstance(spec, Ladder):
        return ladder(spec.k)
    if isinstance(spec, Vk):
        return vk(spec.k)
    if isinstance(spec, K3k):
        return k3k(spec.k)
    if isinstance(spec, Template):
        return build_template(spec.spec)
    if isinstance(spec, ParallelExtension):
        return parallel_extension(spec.base, spec.mult)
    if isinstance(spec, ParallelPathExtension):
        return parallel_path_extension(spec.base, spec.lengths)
    if isinstance(spec, Random2Connected):
        return random_2connected(spec.n, spec.m, spec.seed)
    raise GraphError(f"unknown family {spec!r}")


# -- enumeration -----------------------------------------------------------------


def _check_enum_cap(max_edges: int) -> None:
    if max_edges > ENUM_CAP:
        raise CapExceeded(f"size cap: enumeration supports at most {ENUM_CAP} edges")


def _add_path(g: Multigraph, a: int, b: int, length: int) -> Multigraph:
    nv = 1 + max(g.vertices)
    chain = [a] + list(range(nv, nv + length - 1)) + [b]
    e0 = g.next_edge_id()
    return g.add_edges({e0 + i: (chain[i], chain[i + 1]) for i in range(length)})


def _ear_levels(max_edges: int, closed: bool) -> List[Dict[bytes, Multigraph]]:
    levels: List[Dict[bytes, Multigraph]] = [dict() for _ in range(max_edges + 1)]
    for m in range(2, max_edges + 1):
        c = cycle(m)
        levels[m][canonical_form(c, None)] = c
    for m in range(2, max_edges + 1):
        for g in sorted(levels[m].values(), key=lambda h: canonical_form(h, None)):
            vs = sorted(g.vertices)
            pairs = list(combinations(vs, 2))
            if closed:
                pairs += [(v, v) for v in vs]
            for a, b in pairs:
                for ln in range(2 if a == b else 1, max_edges - m + 1):
                    h = _add_path(g, a, b, ln)
                    levels[m + ln].setdefault(canonical_form(h, None), h)
    return levels


def _with_loops(levels: List[Dict[bytes, Multigraph]], max_edges: int) -> List[Dict[bytes, Multigraph]]:
    out = [dict(lv) for lv in levels]
    for m in range(1, max_edges):
        for g in list(out[m].values()):
            for v in sorted(g.vertices):
                h = g.add_edges({g.next_edge_id(): (v, v)})
                out[m + 1].setdefault(canonical_form(h, None), h)
    return out


def enumerate_2connected(max_edges: int, loopless: bool = True) -> Iterator[Multigraph]:
    """One graph per isomorphism class of 2-connected multigraphs with at most ``max_edges`` edges.

    Built by open-ear augmentation from cycles; B_2 is included.  With
    ``loopless=False`` loops are also added (they do not affect 2-connectivity).
    """
    _check_enum_cap(max_edges)
    levels = _ear_levels(max_edges, closed=False)
    if not loopless:
        levels = _with_loops(levels, max_edges)
    for lv in levels:
        for code in sorted(lv):
            yield lv[code]


def enumerate_2edge_connected(max_edges: int, loopless: bool = True) -> Iterator[Multigraph]:
    """One graph per isomorphism class of 2-edge-connected multigraphs (closed ears allowed)."""
    _check_enum_cap(max_edges)
    levels = _ear_levels(max_edges, closed=True)
    if not loopless:
        levels = _with_loops(levels, max_edges)
    for lv in levels:
        for code in sorted(lv):
            yield lv[code]


def enumerate_multigraphs(max_edges: int, isolated: int = 1) -> Iterator[Multigraph]:
    """Loopless multigraphs with at most ``max_edges`` edges and at most ``isolated`` isolated vertices.

    Excludes the empty graph.  Grown edge by edge (old-old, old-new or new-new).
    """
    _check_enum_cap(max_edges)
    empty = Multigraph([], {})
    levels: List[Dict[bytes, Multigraph]] = [{canonical_form(empty, None): empty}]
    for m in range(1, max_edges + 1):
        cur: Dict[bytes, Multigraph] = {}
        for g in levels[m - 1].values():
            nv = 1 + max(g.vertices, default=-1)
            vs = sorted(g.vertices)
            cands = list(combinations(vs, 2)) + [(v, nv) for v in vs] + [(nv, nv + 1)]
            for a, b in cands:
                h = Multigraph(g.vertices | {a, b}, {**g.edges, g.next_edge_id(): (a, b)})
                cur.setdefault(canonical_form(h, None), h)
        levels.append(cur)
    out: Dict[bytes, Multigraph] = {}
    for lv in levels:
        for g in lv.values():
            h = g
            for _ in range(isolated + 1):
                if h.num_vertices:
                    out.setdefault(canonical_form(h, None), h)
                h = Multigraph(h.vertices | {1 + max(h.vertices, default=-1)}, h.edges)
    for code in sorted(out, key=lambda c: (out[c].num_edges, out[c].num_vertices, c)):
        yield out[code]


def enumerate_simple_3connected(max_vertices: int = 7) -> Iterator[Multigraph]:
    """Simple 3-connected graphs on at most 7 vertices, from the networkx graph atlas."""
    if max_vertices > 7:
        raise CapExceeded("size cap: the atlas covers at most 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 4 or n > max_vertices:
            continue
        if nx.node_connectivity(h) >= 3:
            yield Multigraph.from_pairs(sorted(tuple(sorted(e)) for e in h.edges()), n)

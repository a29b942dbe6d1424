import itertools
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from ccminor.decompose import build_template, is_parallel_path_extension, is_template
from ccminor.errors import GraphError
from ccminor.extract import (BOND, FAILURE, FAN_TYPE, K4_EXT, TEMPLATE, BoundFns, HeavyPath, HighDegreeVertex,
                             LongPath, extract_bond, extract_fan_from_cycle_island, extract_from_3connected,
                             extract_large_3connected, extract_parallel_cycles, extract_template, f_wt,
                             find_theta, find_type_a_theta, is_witness, weighted_tree_witness)
from ccminor.extract.shapes import bond_size, fan_outer_spokes_ok, is_fan_type, k4_parallel_rule_ok, parallel_cycles_ok
from ccminor.extract.theta import TYPE_B
from ccminor.gen import bond, cycle, fan, random_parallel_path_extension, random_template_spec, vk, wheel
from ccminor.io import graph_from_json
from ccminor.isomorph import is_isomorphic
from ccminor.multigraph import Multigraph, edge_connectivity, is_tree

from helpers import K4, K5, k_edge_connected, path, star, two_connected

PRISM = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


# -- bounds ------------------------------------------------------------------------

def test_pinned_thresholds():
    assert f_wt(2) == 6
    assert f_wt(3) == 12
    assert f_wt(4) == 84
    fns = BoundFns()
    assert fns.f_3con(3) == comb(12, 2) == 66
    assert fns.g(1) == 66
    assert fns.g(2) == 3486 + 3486 ** 2


def test_bounds_are_exact_big_integers():
    assert BoundFns().g(4) == sum(comb(f_wt(6), 2) ** i for i in range(1, 5))


def test_witness_examples():
    # weights are scaled past f_wt(3) = 12 so the threshold precondition holds
    assert weighted_tree_witness(star(4), {v: 3 for v in range(5)}, 3) == HighDegreeVertex(0)
    assert isinstance(weighted_tree_witness(path(4), {v: 4 for v in range(4)}, 3), LongPath)
    assert weighted_tree_witness(Multigraph([0]), {0: 13}, 3) == HeavyPath((0,))


def test_witness_below_threshold():
    with pytest.raises(GraphError, match="below threshold"):
        weighted_tree_witness(Multigraph([0]), {0: 5}, 3)
    with pytest.raises(GraphError):
        weighted_tree_witness(cycle(3), {0: 99}, 3)


@given(st.integers(1, 9), st.integers(0, 10 ** 6), st.integers(2, 4))
def test_witnesses_are_valid(n, seed, t):
    rng = random.Random(seed)
    tree = Multigraph(range(n), [(i - 1, rng.randrange(i), i) for i in range(1, n)])
    assert is_tree(tree)
    w = {v: rng.randint(0, t + 1) for v in range(n)}
    w[rng.randrange(n)] += f_wt(t) + 1
    assert is_witness(tree, w, t, weighted_tree_witness(tree, w, t))


# -- parallel cycles and bonds -----------------------------------------------------

def test_parallel_cycles_examples():
    res = extract_parallel_cycles(bond(3), 0)
    assert res.graph == bond(3) and len(res.trace) == 0
    res = extract_parallel_cycles(cycle(4), 0)
    assert res.graph == cycle(4) and len(res.trace) == 0
    res = extract_parallel_cycles(K4, 0)
    assert is_isomorphic(res.graph, bond(3)) and 0 in res.graph.edges and res.replays(K4)


def test_bond_examples():
    assert extract_bond(bond(3), 0).graph == bond(3)
    res = extract_bond(K4, 0)
    assert bond_size(res.graph) == 3 and res.replays(K4)
    res = extract_bond(K5, 0)
    assert bond_size(res.graph) >= 4 and edge_connectivity(res.graph) >= 4 and res.replays(K5)


@given(two_connected(max_n=6))
def test_parallel_cycles_property(g):
    for e in g.edges:
        res = extract_parallel_cycles(g, e)
        assert parallel_cycles_ok(res.graph, e) is not None
        assert res.replays(g)


@given(k_edge_connected(k=3, max_n=7))
def test_bond_property(g):
    if g.num_vertices < 2:
        return
    e = min(e for e in g.edges if not g.is_loop(e))
    res = extract_bond(g, e)
    assert bond_size(res.graph) >= 3 and e in res.graph.edges and res.replays(g)


# -- 3-connected graphs ------------------------------------------------------------

def test_theta_examples():
    th = find_theta(K4, 0, 2, 0, 5)  # edges 01 and 23, ends 0 and 2 adjacent
    assert th.kind == TYPE_B and th.is_valid(K4)
    assert {0, 5} <= set(th.edges())
    th = find_theta(PRISM, 0, 3, 0, 3)
    assert th.is_valid(PRISM) and {0, 3} <= set(th.edges())


def test_3connected_examples():
    res = extract_from_3connected(K4, 0, 5)
    assert res.kind == K4_EXT and res.graph == K4 and len(res.trace) == 0
    w = wheel(4)
    res = extract_from_3connected(w, 0, 1)
    assert res.kind == BOND and bond_size(res.graph) == 4
    for e, f in [(6, 7), (6, 8), (0, 3)]:
        res = extract_from_3connected(PRISM, e, f)
        assert res.kind in (BOND, FAN_TYPE, K4_EXT) and res.replays(PRISM)


def test_3connected_rejects_parallel_marks():
    with pytest.raises(GraphError):
        extract_from_3connected(K4, 0, 0)


@pytest.mark.parametrize("g", [wheel(5), vk(4), K5, PRISM], ids=["W5", "V4", "K5", "prism"])
def test_3connected_taxonomy(g):
    for e, f in itertools.combinations(sorted(g.edges), 2):
        res = extract_from_3connected(g, e, f)
        h = res.graph
        assert res.replays(g) and e in h.edges and f in h.edges
        if res.kind == BOND:
            assert bond_size(h) >= 3
        elif res.kind == FAN_TYPE:
            assert fan_outer_spokes_ok(h, e, f)
        else:
            assert res.kind == K4_EXT
            assert k4_parallel_rule_ok(h, e, f) and find_type_a_theta(h, e, f) is None


# -- large 3-connected graphs ------------------------------------------------------

def _rim(w):
    return [e for e, (a, b) in w.edges.items() if 0 not in (a, b)]


def test_fan_from_island_examples():
    w = wheel(8)
    res = extract_fan_from_cycle_island(w, _rim(w), 4)
    assert res.kind == FAN_TYPE and res.params["ts"] == [8]
    res = extract_fan_from_cycle_island(w, _rim(w), 9)
    assert res.kind == FAILURE and res.params["sum"] == 8
    g = vk(6)
    res = extract_fan_from_cycle_island(g, [0, 1, 2, 3, 4, 14], 3)
    assert res.kind == FAN_TYPE and sum(res.params["ts"]) >= 3 and res.replays(g)


def test_large_examples():
    res = extract_large_3connected(wheel(10), 5)
    assert res.kind == FAN_TYPE and sum(res.params["ts"]) >= 5 and is_fan_type(res.graph)
    res = extract_large_3connected(K5, 4)
    assert res.kind == FAN_TYPE and sum(res.params["ts"]) >= 4 and res.replays(K5)
    assert extract_large_3connected(K4, 30).kind == FAILURE


# -- templates ---------------------------------------------------------------------

def test_template_from_fan():
    res = extract_template(fan(5), 7)
    assert res.kind == TEMPLATE and res.params["parts"] == 7


def test_template_failure_is_honest():
    res = extract_template(K4, 3)
    assert res.kind == FAILURE and res.params["parts"] == 1


def test_template_big_label_case():
    res = extract_template(wheel(12), 3)
    assert res.kind == TEMPLATE and res.params["case"] == "big-label" and res.replays(wheel(12))


@given(st.integers(0, 10 ** 6))
def test_template_round_trip(seed):
    rng = random.Random(seed)
    spec = random_template_spec(rng, 3, 6)
    g = random_parallel_path_extension(build_template(spec), rng, max_edges=40)
    res = extract_template(g, spec.r)
    assert res.kind == TEMPLATE and res.params["parts"] >= spec.r and res.replays(g)
    core = graph_from_json(res.params["core"])
    assert is_template(core) is not None and is_parallel_path_extension(res.graph, core)

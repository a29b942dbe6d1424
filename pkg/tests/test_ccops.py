import random

import pytest
from hypothesis import given, strategies as st

from ccminor.ccops import (CcPartition, ContractionTrace, Contractor, contract_cycle, contract_subgraph,
                           replay, trace_from_json, verify_partition)
from ccminor.errors import GraphError, TraceError
from ccminor.gen import bond, cycle, wheel
from ccminor.isomorph import is_isomorphic
from ccminor.multigraph import Multigraph, edge_connectivity, is_two_edge_connected, iter_cycles

from helpers import K4, k_edge_connected, two_connected

TRIANGLE = frozenset({0, 1, 3})  # K4 edges 01, 02, 12


def test_contract_triangle_of_k4_gives_b3():
    h = contract_cycle(K4, TRIANGLE)
    assert is_isomorphic(h, bond(3))
    assert set(h.edges) == {2, 4, 5}


def test_contract_whole_cycle_gives_k1():
    h = contract_cycle(cycle(6), range(6))
    assert h.num_vertices == 1 and h.num_edges == 0


def test_contract_chordal_triangle():
    g = cycle(4).add_edges({4: (0, 2)})
    h = contract_cycle(g, {0, 1, 4})
    assert is_isomorphic(h, bond(2))


def test_contract_rejects_non_cycle():
    with pytest.raises(GraphError):
        contract_cycle(K4, {0, 1})


def test_contract_subgraph_examples():
    h, tr = contract_subgraph(K4, K4.edges)
    assert h.num_vertices == 1 and len(tr) == 2
    assert replay(K4, tr) == h
    h, tr = contract_subgraph(bond(4), {0, 1})
    assert len(tr) == 1 and h == contract_cycle(bond(4), {0, 1})
    w = wheel(4)
    h, _ = contract_subgraph(w, {4, 5, 6, 7})
    assert is_isomorphic(h, bond(4))


def test_replay_examples():
    con = Contractor(K4)
    con.contract(TRIANGLE)
    assert is_isomorphic(replay(K4, con.trace()), bond(3))
    assert replay(cycle(5), Contractor(cycle(5)).trace()) == cycle(5)
    con = Contractor(cycle(5))
    con.contract(range(5))
    assert replay(cycle(5), con.trace()).num_vertices == 1


def test_replay_rejects_foreign_source():
    con = Contractor(K4)
    con.contract(TRIANGLE)
    with pytest.raises(TraceError):
        replay(cycle(4), con.trace())


def test_trace_json_round_trip():
    con = Contractor(wheel(5))
    con.contract({5, 6, 7, 8, 9})
    tr = con.trace()
    assert replay(wheel(5), trace_from_json(tr.dumps(), wheel(5))) == con.graph


def test_verify_partition_examples():
    h = contract_cycle(K4, TRIANGLE)
    crossing = {e: e for e in h.edges}
    good = CcPartition({0: ({0, 1, 2}, TRIANGLE), 3: ({3}, frozenset())}, crossing)
    assert verify_partition(K4, h, good)[0]
    bad = CcPartition({0: ({0, 1, 2}, {0, 3}), 3: ({3}, frozenset())}, crossing)
    assert not verify_partition(K4, h, bad)[0]
    ident = CcPartition({v: ({v}, frozenset()) for v in K4.vertices}, {e: e for e in K4.edges})
    assert verify_partition(K4, K4, ident)[0]


@given(two_connected(), st.integers(0, 10 ** 6))
def test_contraction_keeps_2_edge_connectivity(g, seed):
    rng = random.Random(seed)
    cycles = list(iter_cycles(g))
    h = contract_cycle(g, rng.choice(cycles))
    assert h.num_vertices == 1 or is_two_edge_connected(h)


@given(k_edge_connected(k=3, max_n=7), st.integers(0, 10 ** 6))
def test_contraction_keeps_3_edge_connectivity(g, seed):
    rng = random.Random(seed)
    cycles = list(iter_cycles(g))
    if cycles:
        h = contract_cycle(g, rng.choice(cycles[:200]))
        assert h.num_vertices < 2 or edge_connectivity(h) >= 3


@given(two_connected(), st.integers(0, 10 ** 6))
def test_contractor_trace_replays(g, seed):
    rng = random.Random(seed)
    con = Contractor(g)
    for _ in range(3):
        cycles = list(iter_cycles(con.graph))
        if not cycles:
            break
        con.contract(rng.choice(cycles))
    assert replay(g, con.trace()) == con.graph
    assert all(con.image(v) in con.graph.vertices for v in g.vertices)

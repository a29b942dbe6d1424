from itertools import combinations, combinations_with_replacement

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from ccminor.errors import CapExceeded
from ccminor.extract.shapes import fan_outer_spokes_ok
from ccminor.gen import (Fan, FanType, Random2Connected, Vk, bond, cycle, enumerate_2connected,
                         enumerate_2edge_connected, enumerate_simple_3connected, fan_type, generate, ladder, vk)
from ccminor.isomorph import canonical_form
from ccminor.multigraph import Multigraph, is_k_connected


def _brute(max_edges, test):
    """Isomorphism classes by listing every edge multiset and comparing with networkx."""
    reps = []
    for n in range(2, max_edges + 1):
        pairs = list(combinations(range(n), 2))
        for m in range(1, max_edges + 1):
            for es in combinations_with_replacement(pairs, m):
                G = nx.MultiGraph()
                G.add_nodes_from(range(n))
                G.add_edges_from(es)
                if test(G) and not any(nx.is_isomorphic(G, H) for H in reps):
                    reps.append(G)
    return len(reps)


def _two_connected(G):
    if G.number_of_nodes() == 2:
        return G.number_of_edges() >= 2
    return nx.is_biconnected(nx.Graph(G))


def _two_edge_connected(G):
    if not nx.is_connected(G):
        return False
    for e in list(G.edges(keys=True)):
        H = G.copy()
        H.remove_edge(*e)
        if not nx.is_connected(H):
            return False
    return True


def test_enumeration_examples():
    assert [canonical_form(g) for g in enumerate_2connected(2)] == [canonical_form(bond(2))]
    got = {canonical_form(g) for g in enumerate_2connected(3)}
    assert got == {canonical_form(bond(2)), canonical_form(bond(3)), canonical_form(cycle(3))}


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_2connected_count_matches_brute_force(m):
    assert sum(1 for _ in enumerate_2connected(m)) == _brute(m, _two_connected)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_2edge_connected_count_matches_brute_force(m):
    assert sum(1 for _ in enumerate_2edge_connected(m)) == _brute(m, _two_edge_connected)


def test_pinned_counts():
    # from the brute-force counter above, extended by the ear enumeration
    assert [sum(1 for _ in enumerate_2connected(m)) for m in range(2, 10)] == [1, 3, 6, 12, 26, 58, 148, 427]


def test_no_duplicate_classes():
    codes = [canonical_form(g) for g in enumerate_2connected(8)]
    assert len(codes) == len(set(codes))


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_2connected(10))


def test_simple_3connected_count():
    # graphs on <= 7 vertices with node connectivity >= 3, counted straight from the atlas
    want = sum(1 for h in nx.graph_atlas_g() if 4 <= h.number_of_nodes() <= 7 and nx.node_connectivity(h) >= 3)
    assert sum(1 for _ in enumerate_simple_3connected(7)) == want == 157


def test_family_examples():
    f4 = generate(Fan(4))
    assert (f4.num_vertices, f4.num_edges) == (5, 7)
    f = generate(FanType((2, 2, 2)))
    assert (f.num_vertices, f.num_edges) == (4, 8)
    v4 = generate(Vk(4))
    assert (v4.num_vertices, v4.num_edges) == (6, 9)
    assert all(v4.degree(v) == 3 for v in v4.vertices) and is_k_connected(v4, 3)


def test_ladder_shape():
    g = ladder(3)
    assert (g.num_vertices, g.num_edges) == (6, 7)
    assert is_k_connected(g, 2) and not is_k_connected(g, 3)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_fan_types_have_outer_spoke_shape(ts):
    g = fan_type(ts)
    spokes = [e for e, (a, b) in g.edges.items() if 0 in (a, b)]
    first = next(e for e in spokes if 1 in g.ends(e))
    last = next(e for e in spokes if len(ts) in g.ends(e))
    if first != last:
        assert fan_outer_spokes_ok(g, first, last)


@given(st.integers(3, 9), st.integers(0, 12), st.integers(0, 10 ** 6))
def test_random_2connected(n, extra, seed):
    g = generate(Random2Connected(n, n + extra, seed))
    assert g.num_vertices == n and g.num_edges == n + extra
    assert is_k_connected(g, 2)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_vk_is_3_connected(k):
    assert is_k_connected(vk(k), 3)

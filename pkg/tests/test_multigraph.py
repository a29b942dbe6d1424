from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from ccminor.errors import GraphError
from ccminor.gen import bond, cycle, wheel
from ccminor.multigraph import (Multigraph, edge_connectivity, find_cycle, internally_disjoint_paths,
                                is_connected, is_cycle, is_k_connected, is_two_edge_connected, iter_cycles)

from helpers import K4, k_edge_connected, multigraphs, path, two_connected


def test_connected_examples():
    assert is_connected(cycle(4))
    two_triangles = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two_triangles)
    assert is_connected(Multigraph([0]))


def test_edge_connectivity_examples():
    assert edge_connectivity(bond(3)) == 3
    assert edge_connectivity(cycle(5)) == 2
    assert edge_connectivity(K4) == 3


def test_k_connected_examples():
    assert is_k_connected(bond(3), 2)
    assert is_k_connected(K4, 3)
    assert not is_k_connected(path(3), 2)


def test_disjoint_paths_examples():
    ps = internally_disjoint_paths(K4, {0}, {1}, 3)
    assert len(ps) == 3
    interiors = [set(vs[1:-1]) for vs, _ in ps]
    assert all(not (a & b) for a, b in combinations(interiors, 2))
    assert internally_disjoint_paths(cycle(4), {0}, {2}, 3) is None
    vs, es = internally_disjoint_paths(K4, {0}, {1}, 1)[0]
    assert (vs, es) == ([0, 1], [0])


def test_disjoint_paths_needs_disjoint_sets():
    with pytest.raises(GraphError):
        internally_disjoint_paths(K4, {0}, {0, 1}, 1)


def test_find_cycle_examples():
    c = find_cycle(K4, must_contain=[0])
    assert 0 in c and len(c) == 3 and is_cycle(K4, c)
    assert find_cycle(cycle(5), must_avoid_vertices=[2]) is None
    assert find_cycle(bond(3), must_contain=[0]) == frozenset({0, 1})


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Multigraph([0, 1], [(0, 0, 2)])
    with pytest.raises(GraphError):
        Multigraph([0, 1], [(0, 0, 1), (0, 1, 0)])


def test_equality_ignores_edge_orientation():
    assert Multigraph([0, 1], {0: (0, 1)}) == Multigraph([0, 1], {0: (1, 0)})
    assert hash(Multigraph([0, 1], {0: (0, 1)})) == hash(Multigraph([0, 1], {0: (1, 0)}))


def _nx(g):
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges.values())
    return G


@given(multigraphs())
def test_connectivity_matches_networkx(g):
    assert is_connected(g) == nx.is_connected(_nx(g))
    if g.num_vertices >= 2 and not g.has_loops():
        assert edge_connectivity(g) == nx.edge_connectivity(_nx(g))


@given(multigraphs(max_n=5, max_m=8, loops=True))
def test_every_cycle_is_two_regular(g):
    for c in iter_cycles(g):
        assert is_cycle(g, c)
        sub = g.edge_subgraph(c)
        assert is_connected(sub)
        assert all(sub.degree(v) == 2 for v in sub.vertices)


@given(two_connected())
def test_generated_graphs_are_2_connected(g):
    assert is_k_connected(g, 2)
    assert g.num_vertices == 2 or is_two_edge_connected(g)


@given(k_edge_connected(k=3))
def test_k_edge_connected_generator(g):
    assert g.num_vertices < 2 or edge_connectivity(g) >= 3


def test_wheel_is_3_connected():
    assert is_k_connected(wheel(5), 3)
    assert not is_k_connected(wheel(5), 4)

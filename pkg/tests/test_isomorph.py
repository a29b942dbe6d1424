import random

import networkx as nx
from hypothesis import given, strategies as st

from ccminor.ccops import replay
from ccminor.gen import bond, cycle, wheel
from ccminor.isomorph import canonical_form, cc_minor_classes, enumerate_cc_minors, is_cc_minor, is_isomorphic
from ccminor.multigraph import Multigraph

from helpers import K4, multigraphs, two_connected


def _shuffle(g, seed):
    vs = sorted(g.vertices)
    perm = vs[:]
    random.Random(seed).shuffle(perm)
    return g.relabel_vertices(dict(zip(vs, perm)))


def test_canonical_form_examples():
    assert canonical_form(cycle(5)) == canonical_form(_shuffle(cycle(5), 3))
    assert canonical_form(bond(3)) != canonical_form(cycle(3))
    assert canonical_form(K4) != canonical_form(K4.delete_edges([0]))


def test_is_cc_minor_examples():
    tr = is_cc_minor(K4, bond(3))
    assert tr is not None and len(tr) == 1
    assert len(is_cc_minor(wheel(4), wheel(4))) == 0
    assert is_cc_minor(cycle(5), cycle(3)) is None


def test_enumerate_examples():
    k1 = canonical_form(Multigraph([0]))
    assert enumerate_cc_minors(cycle(5)) == {canonical_form(cycle(5)), k1}
    assert enumerate_cc_minors(bond(3)) == {canonical_form(bond(3)), k1}
    assert enumerate_cc_minors(Multigraph([0])) == {k1}


def _nx(g):
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges.values())
    return G


@given(multigraphs(max_n=5, max_m=7, loops=True), multigraphs(max_n=5, max_m=7, loops=True))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))


@given(multigraphs(max_n=6, max_m=9, loops=True), st.integers(0, 10 ** 6))
def test_canonical_form_is_relabeling_invariant(g, seed):
    assert canonical_form(g) == canonical_form(_shuffle(g, seed))


@given(two_connected(max_n=5))
def test_minor_certificates_replay(g):
    for code, h in cc_minor_classes(g).items():
        tr = is_cc_minor(g, h)
        assert tr is not None
        assert canonical_form(replay(g, tr)) == code

import pytest
from hypothesis import assume, given

from ccminor.duality import check_duality_lemma, dual, euler_ok, make_embedding, planar_embed, restrict
from ccminor.errors import CapExceeded, GraphError
from ccminor.gen import bond, cycle, wheel
from ccminor.isomorph import is_isomorphic
from ccminor.multigraph import Multigraph

from helpers import K4, K5, two_connected


def test_embed_examples():
    assert len(planar_embed(K4).faces) == 4
    assert planar_embed(K5) is None
    assert len(planar_embed(cycle(4)).faces) == 2


def test_embed_cap():
    with pytest.raises(CapExceeded):
        planar_embed(cycle(13))


def test_dual_examples():
    assert is_isomorphic(dual(cycle(4), planar_embed(cycle(4)))[0], bond(4))
    assert is_isomorphic(dual(bond(3), planar_embed(bond(3)))[0], cycle(3))
    assert is_isomorphic(dual(K4, planar_embed(K4))[0], K4)


def test_dual_keeps_edge_ids():
    w = wheel(5)
    gd, corr = dual(w, planar_embed(w))
    assert set(gd.edges) == set(w.edges) and corr == {e: e for e in w.edges}


def test_foreign_embedding_rejected():
    emb = planar_embed(K4)
    with pytest.raises(GraphError):
        make_embedding(cycle(4), emb.rotation)


@pytest.mark.parametrize("g", [cycle(5), K4, wheel(4)], ids=["C5", "K4", "W4"])
def test_duality_examples(g):
    rep = check_duality_lemma(g)
    assert rep.ok and rep.induced_codes


def test_duality_needs_planar_input():
    with pytest.raises(GraphError):
        check_duality_lemma(K5)


@given(two_connected(max_n=6))
def test_planar_embeddings_satisfy_euler(g):
    emb = planar_embed(g)
    assume(emb is not None)
    assert euler_ok(g, emb)
    gd, _ = dual(g, emb)
    assert gd.num_vertices == len(emb.faces) and gd.num_edges == g.num_edges


@given(two_connected(max_n=5))
def test_restricted_embeddings_stay_planar(g):
    emb = planar_embed(g)
    assume(emb is not None)
    vs = sorted(g.vertices)[:-1] if g.num_vertices > 2 else sorted(g.vertices)
    h, he = restrict(g, emb, vs)
    assert euler_ok(h, he)


@given(two_connected(max_n=5))
def test_duality_property(g):
    assume(not g.has_loops() and planar_embed(g) is not None)
    assert check_duality_lemma(g).ok

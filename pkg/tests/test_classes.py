import json

import pytest
from hypothesis import given

from ccminor.ccops import replay
from ccminor.classes import BOND, CYCLE, FOREST, TREE, classify, in_class, membership, obstruction_kind_ok
from ccminor.errors import GraphError
from ccminor.gen import bond, cycle
from ccminor.isomorph import is_isomorphic
from ccminor.multigraph import Multigraph

from helpers import K4, K5, multigraphs, path


def test_classify_examples():
    v = classify(bond(2), 3)
    assert v.max_k == 2 and v.obstruction.kind == CYCLE and v.obstruction.graph == bond(2)
    v = classify(path(2), 2)
    assert v.max_k == 1 and v.obstruction.kind == TREE
    v = classify(bond(3), 4)
    assert v.max_k == 3 and v.obstruction.kind == BOND and is_isomorphic(v.obstruction.graph, bond(3))


def test_disconnected_graph_gets_forest():
    g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    v = classify(g, 3)
    assert v.max_k == 0 and v.obstruction.kind == FOREST
    assert v.obstruction.graph.num_vertices == 2 and v.obstruction.graph.num_edges == 0


def test_k1_is_in_every_class():
    assert classify(Multigraph([0]), 8).max_k == 8


def test_verdict_json():
    doc = json.loads(classify(K4, 5).dumps())
    assert doc["max_k"] == 3 and doc["obstruction"]["kind"] == BOND
    assert len(doc["obstruction"]["graph"]["edges"]) == 3


def test_membership():
    assert membership(K5, 8) == 4
    assert in_class(cycle(5), 2) and not in_class(cycle(5), 3)


def test_bad_arguments():
    with pytest.raises(GraphError):
        classify(K4, 9)
    with pytest.raises(GraphError):
        classify(Multigraph([0], {0: (0, 0)}), 3)


@given(multigraphs(max_n=6, max_m=10))
def test_obstructions_certify_the_verdict(g):
    v = classify(g, 6)
    if v.max_k == 6:
        assert v.obstruction is None
        return
    ob = v.obstruction
    assert ob.level == v.max_k + 1
    assert replay(g, ob.trace) == ob.graph
    assert obstruction_kind_ok(ob.graph, ob.kind, ob.level)
    assert not in_class(ob.graph, ob.level)
    if v.max_k >= 1:
        assert in_class(g, v.max_k)

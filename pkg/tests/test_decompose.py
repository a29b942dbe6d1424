import random

import pytest
from hypothesis import given, strategies as st

from ccminor.decompose import (B3, K3, THREE, DecompositionTree, TemplateSpec, build_template, compose,
                               is_parallel_path_extension, is_template, parallel_connection, tutte_decomposition,
                               two_sum)
from ccminor.errors import GraphError
from ccminor.gen import bond, cycle, fan, random_parallel_path_extension, random_template_spec
from ccminor.isomorph import is_isomorphic
from ccminor.multigraph import Multigraph

from helpers import K4, two_connected


def _triangle(apex, ids):
    a, b, c = ids
    return Multigraph([0, 1, apex], {a: (0, 1), b: (1, apex), c: (apex, 0)})


def test_two_sum_examples():
    assert is_isomorphic(two_sum(_triangle(2, (0, 1, 2)), _triangle(3, (0, 3, 4)), 0), cycle(4))
    b1 = Multigraph([0, 1], {0: (0, 1), 1: (0, 1), 2: (0, 1)})
    b2 = Multigraph([0, 1], {0: (0, 1), 3: (0, 1), 4: (0, 1)})
    assert is_isomorphic(two_sum(b1, b2, 0), bond(4))
    theta = two_sum(_triangle(2, (0, 1, 2)), b2, 0)
    # 3 + 3 - 2 edges: two parallel edges and a 2-path between the same ends
    assert is_isomorphic(theta, Multigraph.from_pairs([(0, 1), (0, 1), (1, 2), (2, 0)]))


def test_parallel_connection_examples():
    t1, t2 = _triangle(2, (0, 1, 2)), _triangle(3, (0, 3, 4))
    glued = parallel_connection([t1, t2], 0)
    assert glued.num_vertices == 4 and glued.num_edges == 5
    pairs = [Multigraph([0, 1], {0: (0, 1), i: (0, 1)}) for i in (1, 2, 3)]
    assert is_isomorphic(parallel_connection(pairs, 0), bond(4))
    assert parallel_connection([t1], 0) == t1


def test_tutte_examples():
    td = tutte_decomposition(K4)
    assert [n.tag for n in td.nodes.values()] == [THREE]
    assert [n.tag for n in tutte_decomposition(cycle(5)).nodes.values()] == [K3] * 3
    assert [n.tag for n in tutte_decomposition(bond(4)).nodes.values()] == [B3] * 2


def test_compose_examples():
    assert compose(tutte_decomposition(cycle(5))) == cycle(5)
    assert compose(tutte_decomposition(bond(4))) == bond(4)
    single = DecompositionTree({0: tutte_decomposition(K4).nodes[0]}, [])
    assert is_isomorphic(compose(single), K4)


def test_tree_json_round_trip():
    td = tutte_decomposition(fan(4))
    assert compose(DecompositionTree.from_json(td.to_json())) == fan(4)


def test_tutte_rejects_cut_vertex():
    bowtie = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    with pytest.raises(GraphError):
        tutte_decomposition(bowtie)


def test_is_template_examples():
    assert is_template(fan(3)).parts == ("K3", "B3", "K3")
    assert is_template(bond(5)).parts == ("B3", "B3", "B3")
    pendant = Multigraph(list(range(5)), dict(cycle(4).edges) | {4: (0, 4)})
    assert is_template(pendant) is None


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_fan_part_count(n):
    assert is_template(fan(n)).r >= 2 * n - 3


def test_parallel_path_extension_examples():
    assert is_parallel_path_extension(cycle(6), cycle(3))
    assert is_parallel_path_extension(bond(3), Multigraph([0, 1], {0: (0, 1)}))
    assert not is_parallel_path_extension(K4, cycle(3))


@given(two_connected(max_n=7))
def test_compose_inverts_decomposition(g):
    td = tutte_decomposition(g)
    td.validate()
    assert compose(td) == g


@given(st.integers(0, 10 ** 6))
def test_built_templates_are_recognised(seed):
    spec = random_template_spec(random.Random(seed))
    found = is_template(build_template(spec))
    assert found is not None and found.r >= spec.r


@given(st.integers(0, 10 ** 6))
def test_random_extensions_are_recognised(seed):
    rng = random.Random(seed)
    base = build_template(random_template_spec(rng, 3, 5))
    g = random_parallel_path_extension(base, rng, max_edges=40)
    assert is_parallel_path_extension(g, base)

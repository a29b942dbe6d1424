"""Small graphs and hypothesis strategies shared by the tests."""

from itertools import combinations

from hypothesis import reject, strategies as st

from ccminor.errors import GraphError
from ccminor.gen import random_2connected, random_k_edge_connected
from ccminor.multigraph import Multigraph


def complete(n):
    return Multigraph.from_pairs(list(combinations(range(n), 2)), n)


def path(n):
    return Multigraph.from_pairs([(i, i + 1) for i in range(n - 1)], n)


def star(k):
    return Multigraph.from_pairs([(0, i) for i in range(1, k + 1)], k + 1)


K4 = complete(4)
K5 = complete(5)


@st.composite
def two_connected(draw, max_n=7, simple=False):
    n = draw(st.integers(2 if not simple else 3, max_n))
    lo = n if n > 2 else 2
    hi = 2 * n + 2 if not simple else min(n * (n - 1) // 2, 2 * n)
    m = draw(st.integers(lo, max(lo, hi)))
    try:
        return random_2connected(n, m, seed=draw(st.integers(0, 10 ** 6)), simple=simple)
    except GraphError:
        reject()


@st.composite
def k_edge_connected(draw, k=3, max_n=8):
    n = draw(st.integers(2, max_n))
    return random_k_edge_connected(n, k, seed=draw(st.integers(0, 10 ** 6)), extra_edges=draw(st.integers(0, n)))


@st.composite
def multigraphs(draw, max_n=6, max_m=9, loops=False):
    n = draw(st.integers(1, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    if not loops:
        pairs = [(a, b) for a, b in pairs if a != b]
    return Multigraph.from_pairs(pairs, n)

import pytest
from hypothesis import given, settings

from conftest import graphs, posets
from posetao.constructions import boolean_lattice, grid_cliques, lambda_extremal, multipartite
from posetao.poset import Poset, SimpleGraph, comparability_graph, height, invert, width
from posetao.solver import (
    NodeLimitExceeded,
    SolverConfig,
    TooLarge,
    ao_bounds,
    ao_brute,
    ao_exact,
    ao_poset,
    ceil_sqrt,
    clique_number,
    independence_number,
    is_cluster,
)


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_is_cluster_examples():
    two_triangles = SimpleGraph.complete(3).disjoint_union(SimpleGraph.complete(3))
    assert is_cluster(two_triangles) is None
    assert is_cluster(path(3)) == (0, 1, 2)
    u, v, w = is_cluster(cycle(5))
    G = cycle(5)
    assert G.has_edge(u, v) and G.has_edge(v, w) and not G.has_edge(u, w)


def test_ao_exact_examples():
    assert ao_exact(grid_cliques(3)).value == 9
    assert ao_exact(comparability_graph(boolean_lattice(3))).value == 4
    assert ao_exact(SimpleGraph.complete(5)).value == 5
    assert ao_exact(SimpleGraph.empty(7)).value == 7
    assert ao_exact(SimpleGraph.empty(0)).value == 0


def test_ao_brute_examples():
    assert ao_brute(path(4)) == 3
    assert ao_brute(SimpleGraph.complete(3)) == 3
    assert ao_brute(cycle(5)) == ao_exact(cycle(5)).value


def test_witness_partitions_vertices():
    G = cycle(7)
    r = ao_exact(G)
    assert r.witness | r.deletions == frozenset(range(7))
    assert not r.witness & r.deletions
    assert len(r.witness) == r.value
    assert is_cluster(G.induced(sorted(r.witness))) is None


def test_ao_poset_examples():
    result, family = ao_poset(Poset.chain(6))
    assert result.value == 6 and family.chains == ((0, 1, 2, 3, 4, 5),)
    assert ao_poset(multipartite(9))[0].value == 3
    P = lambda_extremal(4).poset
    result, family = ao_poset(P)
    assert result.value == 4 == ao_brute(comparability_graph(P))
    assert family.is_valid(P) and family.size == 4


def test_node_limit_raises():
    with pytest.raises(NodeLimitExceeded):
        ao_exact(comparability_graph(boolean_lattice(4)), SolverConfig(node_limit=1))


def test_brute_guard():
    with pytest.raises(TooLarge):
        ao_brute(SimpleGraph.empty(21))
    with pytest.raises(ValueError):
        SolverConfig(max_brute_n=30)


def test_ceil_sqrt():
    assert [ceil_sqrt(n) for n in range(1, 11)] == [1, 2, 2, 2, 3, 3, 3, 3, 3, 4]


def test_alpha_omega():
    assert independence_number(cycle(5)) == 2
    assert clique_number(cycle(5)) == 2
    assert independence_number(grid_cliques(3)) == 3


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_exact_matches_brute(G):
    assert ao_exact(G).value == ao_brute(G)


@given(graphs(max_n=9))
def test_alpha_omega_bounds(G):
    ao = ao_exact(G).value
    a, w = independence_number(G), clique_number(G)
    assert max(a, w) <= ao <= a * w if G.n else ao == 0


@given(posets(max_n=8))
def test_poset_bounds_and_duality(P):
    result, family = ao_poset(P)
    lo, hi = ao_bounds(P)
    assert lo <= result.value <= hi
    assert max(width(P), height(P)) <= result.value
    assert family.is_valid(P) and family.size == result.value
    assert ao_poset(invert(P))[0].value == result.value


@given(graphs(max_n=9))
def test_deterministic(G):
    assert ao_exact(G) == ao_exact(G)

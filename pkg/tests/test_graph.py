import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from cutcomplex.graph import (
    bits,
    complete_bipartite,
    cycle,
    dumps_graph,
    family,
    grid,
    independence_number,
    independent_sets,
    is_chordal,
    is_clique,
    is_independent,
    loads_graph,
    make_graph,
    mask_of,
    maximal_cliques,
    perfect_elimination_order,
    is_perfect_elimination_order,
    prism,
    random_chordal,
    random_tree,
    simplicial_vertices,
    squared_cycle,
)

from conftest import graphs


def brute_independent(G, k):
    return sorted(
        mask_of(c) for c in combinations(range(G.n), k)
        if all(not G.has_edge(i, j) for i, j in combinations(c, 2))
    )


def brute_chordal(G):
    # no induced cycle of length >= 4
    for size in range(4, G.n + 1):
        for vs in combinations(range(G.n), size):
            S = mask_of(vs)
            if all(bin(G.adj[v] & S).count("1") == 2 for v in vs) and G.is_connected_on(S):
                return False
    return True


def test_bits_roundtrip():
    assert bits(0) == []
    assert bits(0b10110) == [1, 2, 4]
    assert mask_of([4, 1, 2]) == 0b10110


@given(graphs())
def test_independent_sets_match_brute_force(G):
    for k in range(1, G.n + 2):
        assert sorted(independent_sets(G, k)) == brute_independent(G, k)


@given(graphs())
def test_independence_number_is_largest_size(G):
    a = independence_number(G)
    assert brute_independent(G, a)
    assert not brute_independent(G, a + 1)


@given(graphs())
def test_maximal_cliques_are_maximal(G):
    cliques = maximal_cliques(G)
    for c in cliques:
        assert is_clique(G, c)
        for v in range(G.n):
            if not c >> v & 1:
                assert not is_clique(G, c | 1 << v)
    # every edge lies in some maximal clique
    for i, j in G.edges():
        assert any(c >> i & 1 and c >> j & 1 for c in cliques)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_chordality_matches_induced_cycle_search(G):
    assert is_chordal(G) == brute_chordal(G)
    order = perfect_elimination_order(G)
    assert (order is not None) == is_chordal(G)
    if order is not None:
        assert is_perfect_elimination_order(G, order)


def test_random_chordal_and_trees():
    rng = random.Random(5)
    for n in range(1, 9):
        for _ in range(10):
            assert is_chordal(random_chordal(n, rng))
            T = random_tree(n, rng)
            assert T.num_edges == n - 1 and len(T.components()) == 1


@given(graphs())
def test_simplicial_vertices_have_clique_neighborhoods(G):
    sv = simplicial_vertices(G)
    for v in range(G.n):
        assert bool(sv >> v & 1) == is_clique(G, G.adj[v])


def test_family_sizes():
    assert cycle(7).num_edges == 7
    assert complete_bipartite(2, 3).num_edges == 6
    assert prism(4).num_edges == 2 * 6 + 4
    assert grid(3, 4).num_edges == 3 * 3 + 2 * 4
    assert squared_cycle(8).num_edges == 16
    assert squared_cycle(5).num_edges == 10  # distance-two chords fill in K5


def test_family_labels():
    G = grid(3, 3)
    assert G.has_edge(0, 1) and G.has_edge(0, 3) and not G.has_edge(2, 3)
    P = prism(3)
    assert P.has_edge(0, 3) and P.has_edge(3, 4) and not P.has_edge(0, 4)
    K = complete_bipartite(2, 3)
    assert is_independent(K, mask_of([0, 1])) and is_independent(K, mask_of([2, 3, 4]))


def test_family_spec_parsing():
    assert family("grid:2,3") == grid(2, 3)
    assert family("kmn", 2, 2) == complete_bipartite(2, 2)
    with pytest.raises(ValueError):
        family("nonsense:3")
    with pytest.raises(ValueError):
        family("grid:3")


def test_independent_sets_need_positive_k():
    with pytest.raises(ValueError):
        list(independent_sets(cycle(4), 0))


def test_make_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        make_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        make_graph(65, [])


@given(graphs(min_n=0))
def test_text_format_roundtrip(G):
    H = loads_graph(dumps_graph(G))
    assert H.n == G.n and H.adj == G.adj


def test_text_format_errors():
    with pytest.raises(ValueError):
        loads_graph("")
    with pytest.raises(ValueError):
        loads_graph("3 2\n0 1\n")

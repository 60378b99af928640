from itertools import combinations

from hypothesis import strategies as st

from cutcomplex.graph import make_graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_k(draw, min_n=1, max_n=7, min_k=1):
    G = draw(graphs(min_n=max(min_n, min_k), max_n=max_n))
    k = draw(st.integers(min_k, max(min_k, G.n)))
    return G, k


@st.composite
def complexes(draw, max_n=6, max_facets=5):
    from cutcomplex.complex import SimplicialComplex

    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_facets))
    return SimplicialComplex(n, facets)

"""Total k-cut complexes, k-cut complexes, and the structural recurrences between them."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .complex import (
    SimplicialComplex,
    cone,
    relabel,
    union,
    void,
)
from .graph import (
    Graph,
    add_isolated_vertex,
    bits,
    independent_sets,
    induced_subgraph,
    make_graph,
    popcount,
)

REALIZABILITY_MAX_N = 7


def total_cut_complex(G: Graph, k: int) -> SimplicialComplex:
    """Complex whose facets are the complements of the independent k-sets of G."""
    if k < 1:
        raise ValueError("k must be >= 1")
    full = G.vertex_mask
    facets = sorted(full & ~S for S in independent_sets(G, k))
    # distinct sets of equal size already form an antichain
    return SimplicialComplex(G.n, facets, _normalized=True)


def cut_complex(G: Graph, k: int) -> SimplicialComplex:
    """Facets are complements of k-sets inducing a disconnected subgraph."""
    if k < 2:
        raise ValueError("cut complex needs k >= 2")
    full = G.vertex_mask
    facets = []
    for combo in combinations(range(G.n), k):
        S = sum(1 << v for v in combo)
        if not G.is_connected_on(S):
            facets.append(full & ~S)
    return SimplicialComplex(G.n, sorted(facets), _normalized=True)


def next_total_from_ridges(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    """Complex generated by the ridges of ``delta`` lying in exactly k+1 facets.

    Applied to the total k-cut complex of a graph (k >= 2) this yields the total
    (k+1)-cut complex without looking at the graph.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if delta.is_void:
        return void(delta.n)
    if not delta.is_pure():
        raise ValueError("input complex must be pure")
    ridges = [r for r, c in delta.ridges_with_facet_counts() if c == k + 1]
    return SimplicialComplex(delta.n, ridges, _normalized=True)


def subgraph_complex(G: Graph, W: int, k: int) -> SimplicialComplex:
    """Total k-cut complex of ``G \\ W`` written back on G's vertex labels."""
    keep = bits(G.vertex_mask & ~W)
    return relabel(total_cut_complex(induced_subgraph(G, G.vertex_mask & ~W), k), G.n, keep)


def isolated_vertex_decomposition(G: Graph, k: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Both sides of the identity for ``G`` plus an isolated vertex ``v = n``.

    Returns ``(direct, assembled)`` where ``direct`` is built from ``G + v`` and
    ``assembled`` is the union of the (k-1)-complex of G with the cone (apex v)
    over the k-complex of G.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    Gv = add_isolated_vertex(G)
    direct = total_cut_complex(Gv, k)
    lower = total_cut_complex(G, k - 1)
    upper = total_cut_complex(G, k)
    coned = cone(SimplicialComplex(Gv.n, upper.facets, _normalized=True), apex=G.n)
    assembled = union(SimplicialComplex(Gv.n, lower.facets, _normalized=True), coned)
    return direct, assembled


def verify_isolated_decomposition(G: Graph, k: int) -> bool:
    direct, assembled = isolated_vertex_decomposition(G, k)
    return direct == assembled


def _forced_non_edges(facets: Iterable[int], n: int) -> set[tuple[int, int]]:
    """Vertex pairs lying inside some facet complement."""
    full = (1 << n) - 1
    forced = set()
    for F in facets:
        for i, j in combinations(bits(full & ~F), 2):
            forced.add((i, j))
    return forced


def realizability_witnesses(
    facets: Sequence, n: int, k: int, *, exact: bool = False
) -> Iterator[Graph]:
    """All graphs on n vertices whose total k-cut complex contains ``facets``.

    With ``exact=True`` only graphs whose complex has exactly these facets are
    produced. Graphs are enumerated over the edge subsets compatible with the
    requested facets: a pair inside any facet complement can never be an edge,
    so every other graph is ruled out without being built.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n > REALIZABILITY_MAX_N:
        raise ValueError(f"exhaustive search capped at n = {REALIZABILITY_MAX_N}")
    masks = [f if isinstance(f, int) else sum(1 << v for v in f) for f in facets]
    wanted = set(masks)
    if any(popcount(F) != n - k for F in masks):
        return
    forced = _forced_non_edges(masks, n)
    free = [p for p in combinations(range(n), 2) if p not in forced]
    for choice in range(1 << len(free)):
        edges = [free[i] for i in range(len(free)) if choice >> i & 1]
        G = make_graph(n, edges)
        got = set(total_cut_complex(G, k).facets)
        if exact and got != wanted:
            continue
        if wanted <= got:
            yield G


def realizability_probe(facets: Sequence, n: int, k: int, *, exact: bool = False) -> Optional[Graph]:
    """First witness from :func:`realizability_witnesses`, or None."""
    return next(realizability_witnesses(facets, n, k, exact=exact), None)


def implied_facets(facets: Sequence, n: int, k: int) -> list[int]:
    """Facets present in the total k-cut complex of every graph containing ``facets``."""
    common = None
    for G in realizability_witnesses(facets, n, k):
        got = set(total_cut_complex(G, k).facets)
        common = got if common is None else common & got
    return sorted(common or [])

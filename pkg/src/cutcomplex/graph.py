"""Simple graphs on vertices ``0..n-1`` stored as bitset adjacency rows.

Vertex sets (faces, independent sets, cliques) are plain Python ints used as
bitmasks: bit ``i`` set means vertex ``i`` is in the set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

WORD_WIDTH = 64


def bits(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[i]`` is the neighbor bitmask of ``i``."""

    n: int
    adj: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if not 0 <= self.n <= WORD_WIDTH:
            raise ValueError(f"vertex count {self.n} outside 0..{WORD_WIDTH}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected_on(self, vertices: int) -> bool:
        """Whether the subgraph induced on ``vertices`` is connected (empty counts as connected)."""
        if not vertices:
            return True
        start = vertices & -vertices
        reach = frontier = start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & vertices & ~reach
            reach |= frontier
        return reach == vertices


def make_graph(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    """Build a graph from an edge list; duplicate edges are collapsed.

    Raises ``ValueError`` on loops or out-of-range endpoints.
    """
    if not 0 <= n <= WORD_WIDTH:
        raise ValueError(f"vertex count {n} outside 0..{WORD_WIDTH}")
    adj = [0] * n
    for e in edges:
        i, j = e
        if i == j:
            raise ValueError(f"loop edge ({i}, {j})")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj), name)


# --- families -------------------------------------------------------------


def edgeless(n: int) -> Graph:
    return make_graph(n, [], f"edgeless:{n}")


def complete(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2), f"complete:{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: vertices ``0..m-1`` on one side, ``m..m+n-1`` on the other."""
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m, n >= 1")
    return make_graph(m + n, [(a, m + b) for a in range(m) for b in range(n)], f"kmn:{m},{n}")


def prism(n: int) -> Graph:
    """K_n x K_2 with i+ -> i-1 and i- -> n+i-1 (1-based i)."""
    if n < 1:
        raise ValueError("prism needs n >= 1")
    edges = [(i, j) for i, j in combinations(range(n), 2)]
    edges += [(n + i, n + j) for i, j in combinations(range(n), 2)]
    edges += [(i, n + i) for i in range(n)]
    return make_graph(2 * n, edges, f"prism:{n}")


def grid(m: int, n: int) -> Graph:
    """P_m x P_n; vertex (i, j) (1-based) is ``(i-1)*n + j - 1``, i.e. rows of n vertices."""
    if m < 1 or n < 1:
        raise ValueError("grid needs m, n >= 1")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return make_graph(m * n, edges, f"grid:{m},{n}")


def squared_cycle(n: int) -> Graph:
    """W_n: cycle on ``0..n-1`` plus all distance-two chords."""
    if n < 3:
        raise ValueError("squared_cycle needs n >= 3")
    edges = {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in (1, 2)}
    edges = [e for e in edges if e[0] != e[1]]
    return make_graph(n, sorted(edges), f"wn:{n}")


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "kn": (complete, 1),
    "edgeless": (edgeless, 1),
    "kbar": (edgeless, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "kmn": (complete_bipartite, 2),
    "prism": (prism, 1),
    "grid": (grid, 2),
    "squared_cycle": (squared_cycle, 1),
    "wn": (squared_cycle, 1),
}


def family(spec: str, *params: int) -> Graph:
    """Build a family member from ``"grid:3,4"`` or ``family("grid", 3, 4)``."""
    if ":" in spec:
        if params:
            raise ValueError("give parameters either in the spec string or as arguments")
        spec, _, rest = spec.partition(":")
        params = tuple(int(p) for p in rest.split(",") if p.strip())
    key = spec.strip().lower()
    if key not in _FAMILIES:
        raise ValueError(f"unknown graph family {spec!r}")
    fn, arity = _FAMILIES[key]
    if len(params) != arity:
        raise ValueError(f"family {key} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# --- independence, cliques, chordality --------------------------------------


def is_independent(G: Graph, S: int) -> bool:
    for v in bits(S):
        if G.adj[v] & S:
            return False
    return True


def is_clique(G: Graph, S: int) -> bool:
    for v in bits(S):
        if (S & ~(1 << v)) & ~G.adj[v]:
            return False
    return True


def independence_number(G: Graph) -> int:
    """Exact maximum independent set size by branch and bound."""
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + popcount(cand) <= best:
            return
        # vertices with no neighbor in cand can always be taken
        free = 0
        for v in bits(cand):
            if not G.adj[v] & cand:
                free |= 1 << v
        if free:
            search(cand & ~free, size + popcount(free))
            return
        v = max(bits(cand), key=lambda u: popcount(G.adj[u] & cand))
        search(cand & ~(1 << v) & ~G.adj[v], size + 1)
        search(cand & ~(1 << v), size)

    search(G.vertex_mask, 0)
    return best


def independent_sets(G: Graph, k: int) -> Iterator[int]:
    """Independent k-sets in increasing bitmask order."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def extend(limit: int, need: int, allowed: int, acc: int) -> Iterator[int]:
        # vertices below `limit` in `allowed`; choose the largest vertex first
        if need == 0:
            yield acc
            return
        for top in range(need - 1, limit):
            if allowed >> top & 1:
                yield from extend(top, need - 1, allowed & ~G.adj[top], acc | 1 << top)

    yield from extend(G.n, k, G.vertex_mask, 0)


def maximal_cliques(G: Graph) -> list[int]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(G.adj[u] & p))
        for v in bits(p & ~G.adj[pivot]):
            bk(r | 1 << v, p & G.adj[v], x & G.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if G.n == 0:
        return [0]
    bk(0, G.vertex_mask, 0)
    return sorted(out)


def simplicial_vertices(G: Graph) -> int:
    """Bitmask of vertices whose neighborhood is a clique (isolated vertices included)."""
    out = 0
    for v in range(G.n):
        if is_clique(G, G.adj[v]):
            out |= 1 << v
    return out


def _mcs_order(G: Graph) -> list[int]:
    weight = [0] * G.n
    unvisited = G.vertex_mask
    order = []
    while unvisited:
        v = max(bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in bits(G.adj[v] & unvisited):
            weight[u] += 1
    return order


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(G.n)):
        return False
    remaining = G.vertex_mask
    for v in order:
        if not is_clique(G, G.adj[v] & remaining):
            return False
        remaining &= ~(1 << v)
    return True


def perfect_elimination_order(G: Graph) -> Optional[list[int]]:
    """A perfect elimination ordering if G is chordal, else None.

    Reverse of a maximum cardinality search order, then re-verified.
    """
    order = _mcs_order(G)[::-1]
    return order if is_perfect_elimination_order(G, order) else None


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def induced_subgraph(G: Graph, W: int) -> Graph:
    """Subgraph on W, relabelled order-preservingly to ``0..|W|-1``."""
    keep = bits(W & G.vertex_mask)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[i], index[j]) for i, j in G.edges() if i in index and j in index]
    return make_graph(len(keep), edges)


def delete_vertices(G: Graph, W: int) -> Graph:
    return induced_subgraph(G, G.vertex_mask & ~W)


def add_isolated_vertex(G: Graph) -> Graph:
    return Graph(G.n + 1, G.adj + (0,), G.name)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return make_graph(n, edges)


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Random chordal graph grown by reversing a random elimination order.

    Each new vertex is joined to a random subset of a random maximal clique of the
    graph built so far, so it is simplicial when added.
    """
    labels = list(range(n))
    rng.shuffle(labels)
    adj = [0] * n
    present = 0
    for v in labels:
        nbrs = 0
        if present and rng.random() < 0.85:
            # absent vertices are isolated, so their cliques are filtered out here
            cliques = [c for c in maximal_cliques(Graph(n, tuple(adj))) if c & present]
            clique = rng.choice(cliques)
            for u in bits(clique):
                if rng.random() < 0.6:
                    nbrs |= 1 << u
        adj[v] = nbrs
        for u in bits(nbrs):
            adj[u] |= 1 << v
        present |= 1 << v
    return Graph(n, tuple(adj), "chordal")


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform-attachment random tree: vertex i hangs off a random earlier vertex."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    return make_graph(n, edges, "tree")


# --- text format ----------------------------------------------------------


def dumps_graph(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    """Parse ``n m`` followed by m lines ``i j`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty graph file")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    return make_graph(n, [(int(a), int(b)) for a, b in rows[1:]])

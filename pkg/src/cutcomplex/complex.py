"""Facet-presented simplicial complexes on a ground set ``0..n-1``.

A complex is stored as the antichain of its facets (bitmasks). Three kinds are
distinguished: the *void* complex (no faces at all), the complex whose only face
is the empty set, and ordinary complexes with at least one vertex.
"""

from __future__ import annotations

import os
import threading
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Graph, bits, maximal_cliques, popcount

VOID = "void"
EMPTY_FACE = "empty-face"
ORDINARY = "ordinary"

DEFAULT_FACE_CAP = 1 << 22


class ResourceCapError(RuntimeError):
    """An exact computation was refused because its input is above a size cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what} {count} exceeds cap {cap}")
        self.what = what
        self.count = count
        self.cap = cap


class FaceCapExceeded(ResourceCapError):
    def __init__(self, count: int, cap: int):
        super().__init__("face count", count, cap)


def face_cap() -> int:
    """Default face cap, overridable through ``CUTCOMPLEX_FACE_CAP``."""
    env = os.environ.get("CUTCOMPLEX_FACE_CAP")
    return int(env) if env else DEFAULT_FACE_CAP


def maximalize(sets: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``sets``, deduplicated and sorted."""
    uniq = sorted(set(sets), key=lambda s: (-popcount(s), s))
    if len({popcount(s) for s in uniq}) <= 1:
        return sorted(uniq)
    kept: list[int] = []
    for s in uniq:
        if not any(s & k == s for k in kept):
            kept.append(s)
    return sorted(kept)


class SimplicialComplex:
    """Immutable simplicial complex given by its facets.

    Faces are enumerated lazily on first use and cached; the cache is filled under
    a lock so concurrent readers see one consistent index.
    """

    __slots__ = ("n", "facets", "_faces", "_lock")

    def __init__(self, n: int, facets: Iterable[int] = (), *, _normalized: bool = False):
        facets = list(facets)
        full = (1 << n) - 1
        for f in facets:
            if f < 0 or f & ~full:
                raise ValueError(f"facet {bits(f)} not inside ground set 0..{n - 1}")
        self.n = n
        self.facets: tuple[int, ...] = tuple(facets if _normalized else maximalize(facets))
        self._faces: Optional[list[list[int]]] = None
        self._lock = threading.Lock()

    # -- identity ---------------------------------------------------------

    @property
    def kind(self) -> str:
        if not self.facets:
            return VOID
        if self.facets == (0,):
            return EMPTY_FACE
        return ORDINARY

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> Optional[int]:
        """Dimension, or None for the void complex."""
        if not self.facets:
            return None
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertices(self) -> int:
        v = 0
        for f in self.facets:
            v |= f
        return v

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        shown = ", ".join("{" + ",".join(map(str, bits(f))) + "}" for f in self.facets[:6])
        more = ", ..." if len(self.facets) > 6 else ""
        return f"SimplicialComplex(n={self.n}, facets=[{shown}{more}])"

    def facet_lists(self) -> list[list[int]]:
        return [bits(f) for f in self.facets]

    # -- faces ------------------------------------------------------------

    def contains(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.contains(f) for f in self.facets)

    def faces_by_size(self, cap: Optional[int] = None) -> list[list[int]]:
        """``out[s]`` = sorted faces with s vertices (so ``out[0] == [0]`` if nonvoid)."""
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    self._faces = self._enumerate(face_cap() if cap is None else cap)
        elif cap is not None:
            total = sum(len(level) for level in self._faces)
            if total > cap:
                raise FaceCapExceeded(total, cap)
        return self._faces

    def _enumerate(self, cap: int) -> list[list[int]]:
        if not self.facets:
            return []
        top = max(popcount(f) for f in self.facets)
        levels: list[set[int]] = [set() for _ in range(top + 1)]
        for f in self.facets:
            levels[popcount(f)].add(f)
        total = 0
        for s in range(top, 0, -1):
            below = levels[s - 1]
            for f in levels[s]:
                m = f
                while m:
                    low = m & -m
                    below.add(f ^ low)
                    m ^= low
            total += len(levels[s])
            if total > cap:
                raise FaceCapExceeded(total, cap)
        return [sorted(level) for level in levels]

    def faces(self, d: int) -> list[int]:
        """Faces of dimension ``d`` (``d = -1`` gives ``[0]``, the empty face)."""
        if self.is_void:
            raise ValueError("the void complex has no faces")
        levels = self.faces_by_size()
        if d + 1 < 0 or d + 1 >= len(levels):
            return []
        return levels[d + 1]

    def all_faces(self) -> list[int]:
        return [f for level in self.faces_by_size() for f in level]

    def num_faces(self) -> int:
        return sum(len(level) for level in self.faces_by_size())

    def f_vector(self) -> list[int]:
        """Face counts starting at dimension -1; empty for the void complex."""
        return [len(level) for level in self.faces_by_size()]

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def ridges_with_facet_counts(self) -> list[tuple[int, int]]:
        """Codimension-one faces of a pure complex with the number of facets containing each."""
        if self.is_void:
            raise ValueError("the void complex has no ridges")
        if not self.is_pure():
            raise ValueError("ridges are defined for pure complexes")
        counts: dict[int, int] = {}
        for f in self.facets:
            m = f
            while m:
                low = m & -m
                r = f ^ low
                counts[r] = counts.get(r, 0) + 1
                m ^= low
        return sorted(counts.items())


def from_facets(n: int, candidate_facets: Iterable) -> SimplicialComplex:
    """Normalize candidates (bitmasks or vertex iterables) into a complex."""
    masks = []
    for c in candidate_facets:
        if isinstance(c, int):
            masks.append(c)
        else:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
    return SimplicialComplex(n, masks)


def void(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, [])


def empty_face_complex(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, [0])


def simplex(n: int, face: Optional[int] = None) -> SimplicialComplex:
    """The full simplex on ``face`` (default: the whole ground set)."""
    return SimplicialComplex(n, [(1 << n) - 1 if face is None else face])


def boundary_of_simplex(n: int) -> SimplicialComplex:
    full = (1 << n) - 1
    return SimplicialComplex(n, [full ^ (1 << v) for v in range(n)])


# --- constructions ----------------------------------------------------------


def _require_face(delta: SimplicialComplex, sigma: int, what: str) -> None:
    if not delta.contains(sigma) or delta.is_void:
        raise ValueError(f"{what}: {bits(sigma)} is not a face")


def link(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face."""
    _require_face(delta, sigma, "link")
    return SimplicialComplex(delta.n, [f & ~sigma for f in delta.facets if f & sigma == sigma])


def star(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Closed star: faces whose union with sigma is a face."""
    _require_face(delta, sigma, "star")
    return SimplicialComplex(delta.n, [f for f in delta.facets if f & sigma == sigma], _normalized=True)


def deletion(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces not containing sigma (proper faces of sigma stay). Deleting the empty set gives void."""
    if sigma == 0:
        return void(delta.n)
    out = []
    for f in delta.facets:
        if f & sigma != sigma:
            out.append(f)
        else:
            for v in bits(sigma):
                out.append(f & ~(1 << v))
    return SimplicialComplex(delta.n, out)


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(max(a.n, b.n), list(a.facets) + list(b.facets))


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(max(a.n, b.n), [f & g for f in a.facets for g in b.facets])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join, with b's ground set shifted to ``a.n .. a.n + b.n - 1``."""
    shift = a.n
    return SimplicialComplex(a.n + b.n, [f | (g << shift) for f in a.facets for g in b.facets])


def join_disjoint(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes already living on disjoint parts of one ground set."""
    if a.vertices & b.vertices:
        raise ValueError("join_disjoint needs disjoint vertex sets")
    return SimplicialComplex(max(a.n, b.n), [f | g for f in a.facets for g in b.facets])


def cone(delta: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    """Cone with a fresh apex (default: new vertex ``n``)."""
    if apex is None:
        apex = delta.n
    if delta.vertices >> apex & 1:
        raise ValueError(f"apex {apex} is already a vertex")
    n = max(delta.n, apex + 1)
    return SimplicialComplex(n, [f | 1 << apex for f in delta.facets])


def suspension(delta: SimplicialComplex) -> SimplicialComplex:
    """Join with two fresh points ``n`` and ``n+1``."""
    return join(delta, SimplicialComplex(2, [1, 2]))


def skeleton(delta: SimplicialComplex, d: int) -> SimplicialComplex:
    """All faces of dimension <= d."""
    if d < -1:
        raise ValueError("skeleton dimension must be >= -1")
    size = d + 1
    out = []
    for f in delta.facets:
        if popcount(f) <= size:
            out.append(f)
        else:
            out.extend(_subsets_of_size(f, size))
    return SimplicialComplex(delta.n, out)


def _subsets_of_size(mask: int, size: int) -> list[int]:
    return [sum(1 << v for v in c) for c in combinations(bits(mask), size)]


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """Faces are complements (in the ground set) of non-faces of delta.

    The dual's facets are the complements of delta's minimal non-faces.
    """
    n = delta.n
    full = (1 << n) - 1
    if delta.is_void:
        return simplex(n)
    faces = set(delta.all_faces())
    minimal = set()
    for f in faces:
        for v in range(n):
            if f >> v & 1:
                continue
            g = f | 1 << v
            if g in faces or g in minimal:
                continue
            if all((g & ~(1 << u)) in faces for u in bits(g)):
                minimal.add(g)
    return SimplicialComplex(n, [full & ~g for g in minimal])


def clique_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.n, maximal_cliques(G), _normalized=True)


# --- text format ----------------------------------------------------------


def dumps_complex(delta: SimplicialComplex) -> str:
    """``n`` on the first line, then one facet per line; ``-`` is the empty facet."""
    lines = [str(delta.n)]
    for f in delta.facets:
        lines.append(" ".join(map(str, bits(f))) if f else "-")
    return "\n".join(lines) + "\n"


def loads_complex(text: str) -> SimplicialComplex:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        return void(0)
    n = int(rows[0])
    facets = []
    for row in rows[1:]:
        facets.append(0 if row == "-" else sum(1 << int(v) for v in row.split()))
    return SimplicialComplex(n, facets)


def relabel(delta: SimplicialComplex, n: int, mapping: Sequence[int]) -> SimplicialComplex:
    """Image of delta under the vertex map ``i -> mapping[i]`` into ground set ``n``."""
    out = []
    for f in delta.facets:
        out.append(sum(1 << mapping[v] for v in bits(f)))
    return SimplicialComplex(n, out)

"""Exact structural decisions: vertex decomposability, shelling search,
homological non-shellability obstructions and contractibility certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .complex import (
    FaceCapExceeded,
    ResourceCapError,
    SimplicialComplex,
    deletion,
    link,
)
from .graph import bits, popcount
from .homology import BettiReport
from .morse import element_matching_sequence, lex_schedule

VD_FACE_CAP = 1 << 16
DEFAULT_FACET_CAP = 12


# --- vertex decomposability ---------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Outcome of the vertex-decomposability recursion.

    ``tree`` is ``"simplex"``, ``"void"``, or ``(v, link_tree, deletion_tree)``
    naming the shedding vertex chosen at each step; ``None`` when not decomposable.
    """

    decomposable: bool
    tree: object = None

    def __bool__(self) -> bool:
        return self.decomposable


def is_vertex_decomposable(delta: SimplicialComplex, *, cap: int = VD_FACE_CAP) -> Decomposition:
    if delta.is_void:
        return Decomposition(True, "void")
    count = delta.num_faces() if len(delta.facets) > 1 else 0
    if count > cap:
        raise FaceCapExceeded(count, cap)
    memo: dict[tuple[int, ...], object] = {}

    def vd(facets: tuple[int, ...]):
        # returns a witness tree or None
        if len(facets) <= 1:
            return "simplex"
        if facets in memo:
            return memo[facets]
        memo[facets] = None
        cx = SimplicialComplex(delta.n, facets, _normalized=True)
        own = set(facets)
        found = None
        for v in bits(cx.vertices):
            dl = deletion(cx, 1 << v)
            # shedding vertex: no facet of the link survives as a facet of the deletion
            if not own.issuperset(dl.facets):
                continue
            sub_del = vd(dl.facets)
            if sub_del is None:
                continue
            sub_lk = vd(link(cx, 1 << v).facets)
            if sub_lk is None:
                continue
            found = (v, sub_lk, sub_del)
            break
        memo[facets] = found
        return found

    tree = vd(delta.facets)
    return Decomposition(tree is not None, tree)


# --- shellability ---------------------------------------------------------------


def is_shelling(facets: Sequence[int]) -> bool:
    """Check the shelling condition for a facet order.

    Each facet must meet the union of its predecessors in a complex whose facets
    all have one vertex fewer than it.
    """
    for j in range(1, len(facets)):
        if not _fits(facets[j], facets[:j]):
            return False
    return True


def _fits(F: int, previous: Sequence[int]) -> bool:
    # x in F is "available" if F - x lies in an earlier facet; every earlier facet
    # must miss at least one available vertex of F.
    avail = 0
    for G in previous:
        missing = F & ~G
        if popcount(missing) == 1:
            avail |= missing
    return all(F & ~G & avail for G in previous)


def find_shelling(
    delta: SimplicialComplex, facet_cap: int = DEFAULT_FACET_CAP
) -> Optional[list[int]]:
    """A shelling order of the facets, or None if there is none.

    Exhaustive search over facet subsets with memoised dead ends; raises
    :class:`ResourceCapError` above ``facet_cap`` facets.
    """
    facets = list(delta.facets)
    t = len(facets)
    if t > facet_cap:
        raise ResourceCapError("facet count", t, facet_cap)
    if t <= 1:
        return facets
    full = (1 << t) - 1
    # missing[i][j]: vertices of facet j not in facet i
    missing = [[facets[j] & ~facets[i] for j in range(t)] for i in range(t)]
    dead: set[int] = set()

    def fits(j: int, used: int) -> bool:
        prev = bits(used)
        avail = 0
        for i in prev:
            m = missing[i][j]
            if m & (m - 1) == 0:
                avail |= m
        return all(missing[i][j] & avail for i in prev)

    def extend(used: int, order: list[int]) -> Optional[list[int]]:
        if used == full:
            return order
        if used in dead:
            return None
        for j in range(t):
            if used >> j & 1 or not fits(j, used):
                continue
            got = extend(used | 1 << j, order + [j])
            if got is not None:
                return got
        dead.add(used)
        return None

    for first in range(t):
        got = extend(1 << first, [first])
        if got is not None:
            return [facets[j] for j in got]
    return None


# --- obstructions and certificates --------------------------------------------


@dataclass(frozen=True)
class Obstruction:
    dims: tuple[int, ...]
    top: int

    def __str__(self) -> str:
        where = ", ".join(map(str, self.dims))
        return f"nonzero reduced homology in dimension(s) {where} below the top dimension {self.top}"


def non_shellability_obstruction(
    delta: SimplicialComplex, report: BettiReport
) -> Optional[Obstruction]:
    """Homology below the top dimension rules out shellability of a pure complex.

    Returns None when no obstruction is found, which proves nothing.
    """
    if not delta.is_pure():
        raise ValueError("obstruction applies to pure complexes")
    if delta.is_void:
        return None
    d = delta.dim
    low = tuple(i for i in range(-1, d) if report[i])
    return Obstruction(low, d) if low else None


@dataclass(frozen=True)
class SingleFacet:
    pass


@dataclass(frozen=True)
class Cone:
    apex: int


@dataclass(frozen=True)
class MorsePoint:
    schedule: tuple[int, ...]


Certificate = Union[SingleFacet, Cone, MorsePoint]


def contractibility_certificate(delta: SimplicialComplex) -> Optional[Certificate]:
    """A reason why ``delta`` is contractible, or None (which proves nothing)."""
    if delta.is_void or delta.kind == "empty-face":
        return None
    if len(delta.facets) == 1:
        return SingleFacet()
    common = delta.facets[0]
    for f in delta.facets[1:]:
        common &= f
    if common:
        return Cone(bits(common)[0])
    schedule = lex_schedule(delta)
    m = element_matching_sequence(delta, schedule)
    if not m.critical and m.empty_matched:
        return MorsePoint(tuple(schedule))
    return None

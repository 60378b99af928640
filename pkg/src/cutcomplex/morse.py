"""Discrete Morse theory on face posets: sequential element matchings, acyclicity
checks, critical-cell census and the homotopy certificates read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Optional, Sequence

from .complex import SimplicialComplex
from .graph import bits, popcount
from .homology import BettiReport, euler_characteristic_reduced


@dataclass(frozen=True)
class Matching:
    """Pairs ``(face, coface)`` from an element-matching schedule.

    ``rounds[i]`` lists the pairs created by the i-th scheduled vertex.
    ``critical`` holds the unmatched faces, the empty face (``0``) included when
    no scheduled vertex was available to absorb it.
    """

    schedule: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    critical: tuple[int, ...]
    rounds: tuple[tuple[tuple[int, int], ...], ...] = ()

    @property
    def empty_matched(self) -> bool:
        return any(a == 0 for a, _ in self.pairs)

    def critical_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.critical:
            d = popcount(c) - 1
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class WedgeOfSpheres:
    dim: int
    count: int


@dataclass(frozen=True)
class Contractible:
    pass


@dataclass(frozen=True)
class Inconclusive:
    reason: str = ""


@dataclass(frozen=True)
class MorseReport:
    cells_per_dim: dict
    empty_matched: bool
    certificate: object
    morse_inequalities: Optional[bool] = None
    notes: tuple = field(default_factory=tuple)

    def describe(self) -> str:
        c = self.certificate
        if isinstance(c, WedgeOfSpheres):
            return f"wedge of {c.count} sphere(s) S^{c.dim}"
        if isinstance(c, Contractible):
            return "contractible"
        return f"inconclusive ({c.reason})"


def element_matching_sequence(delta: SimplicialComplex, schedule: Sequence[int]) -> Matching:
    """Run element matchings with the scheduled vertices, in order.

    Round i pairs every surviving face sigma without x_i with sigma + x_i when
    both are still unmatched; matched faces leave the pool before round i+1.
    """
    if len(set(schedule)) != len(schedule):
        raise ValueError("schedule vertices must be distinct")
    for x in schedule:
        if not 0 <= x < delta.n:
            raise ValueError(f"schedule vertex {x} outside ground set 0..{delta.n - 1}")
    alive = set(delta.all_faces()) if not delta.is_void else set()
    pairs = []
    rounds = []
    for x in schedule:
        bit = 1 << x
        this_round = []
        for sigma in sorted(alive):
            if sigma & bit:
                continue
            tau = sigma | bit
            if tau in alive:
                this_round.append((sigma, tau))
        for sigma, tau in this_round:
            alive.discard(sigma)
            alive.discard(tau)
        pairs.extend(this_round)
        rounds.append(tuple(this_round))
    critical = tuple(sorted(alive, key=lambda f: (popcount(f), f)))
    return Matching(tuple(schedule), tuple(pairs), critical, tuple(rounds))


def verify_acyclic(delta: SimplicialComplex, matching: Matching) -> bool:
    """True iff the matching is a partial matching with no alternating cycle.

    Cycles alternate ``a_1 < u(a_2) > a_2 < ... < u(a_1)``; they are searched for
    on the digraph whose nodes are the matched lower faces.
    """
    up: dict[int, int] = {}
    down: dict[int, int] = {}
    faceset = set(delta.all_faces()) if not delta.is_void else set()
    for a, b in matching.pairs:
        if a not in faceset or b not in faceset:
            raise ValueError(f"pair {bits(a)} < {bits(b)} is not in the complex")
        if a & b != a or popcount(b) != popcount(a) + 1:
            raise ValueError(f"pair {bits(a)} < {bits(b)} is not a cover relation")
        if a in up or a in down or b in up or b in down:
            return False
        up[a] = b
        down[b] = a
    graph = TopologicalSorter()
    for a, b in up.items():
        graph.add(a)
        # a < u(a') for every coface u(a') of a other than u(a)
        m = ~a & ((1 << delta.n) - 1)
        while m:
            low = m & -m
            m ^= low
            c = a | low
            if c != b and c in down:
                graph.add(down[c], a)
    try:
        graph.prepare()
    except CycleError:
        return False
    return True


def _certificate(cells: dict[int, int], empty_matched: bool):
    if empty_matched:
        if not cells:
            return Contractible()
        if len(cells) == 1:
            (d, c), = cells.items()
            return WedgeOfSpheres(d, c)
        return Inconclusive("critical cells in several dimensions")
    if cells == {0: 1}:
        return Contractible()
    return Inconclusive("empty face unmatched")


def morse_report(
    delta: SimplicialComplex, matching: Matching, betti: Optional[BettiReport] = None
) -> MorseReport:
    """Critical-cell census and the homotopy certificate it supports.

    Raises ``ValueError`` if the matching is not acyclic. When a Betti report is
    supplied the weak Morse inequalities ``c_i >= b_i`` are checked as well.
    """
    if not verify_acyclic(delta, matching):
        raise ValueError("matching is not acyclic")
    cells = {d: c for d, c in matching.critical_by_dim().items() if d >= 0}
    empty_matched = matching.empty_matched
    cert = _certificate(cells, empty_matched)
    ineq = None
    if betti is not None and not betti.void:
        ineq = all(cells.get(i, 0) >= betti[i] for i in range(0, (betti.dim or 0) + 1))
    return MorseReport(cells, empty_matched, cert, ineq)


def critical_euler(matching: Matching) -> int:
    """Alternating count of critical cells from dimension -1 (the empty face counts -1)."""
    return sum(1 if popcount(c) % 2 else -1 for c in matching.critical)


def check_parity(delta: SimplicialComplex, matching: Matching) -> bool:
    """Matched pairs cancel in the reduced Euler characteristic."""
    return critical_euler(matching) == euler_characteristic_reduced(delta)


def preset_schedule(family: str, *params: int) -> list[int]:
    """Vertex order of the element matchings used for each graph family.

    Vertices use the labels of :mod:`cutcomplex.graph` (0-based).

    ======================  =================================================
    ``cycle, n, k``         1, 2, ..., n-2k+2 (1-based)
    ``squared_cycle, n``    1, ..., n-3, then n-1 (1-based)
    ``grid, m, n``          1, ..., (m-1)n (1-based, rows of n)
    ``prism, n``            1+, then 1-
    ``bipartite, m, n``     a_1, then b_1
    ``path, n``             left to right
    ======================  =================================================
    """
    fam = family.lower()
    if fam == "cycle":
        n, k = params
        return list(range(0, n - 2 * k + 2))
    if fam in ("squared_cycle", "wn"):
        (n,) = params
        return list(range(0, n - 3)) + [n - 2]
    if fam == "grid":
        m, n = params
        return list(range(0, (m - 1) * n))
    if fam == "prism":
        (n,) = params
        return [0, n]
    if fam in ("bipartite", "kmn", "complete_bipartite"):
        m, _n = params
        return [0, m]
    if fam == "path":
        (n,) = params
        return list(range(n))
    raise ValueError(f"no preset schedule for family {family!r}")


def lex_schedule(delta: SimplicialComplex) -> list[int]:
    return list(range(delta.n))

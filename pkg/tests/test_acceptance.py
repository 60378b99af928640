"""Acceptance gate: ten end-to-end checks, each printing one PASS/FAIL line.

Every comparison is exact integer or set equality. Each check also asserts its
wall-clock budget.
"""

import time
from math import comb

import pytest

from cutcomplex.complex import FaceCapExceeded
from cutcomplex.cutgen import total_cut_complex
from cutcomplex.decide import (
    contractibility_certificate,
    is_shelling,
    non_shellability_obstruction,
)
from cutcomplex.graph import (
    complete_bipartite,
    cycle,
    grid,
    make_graph,
    mask_of,
    prism,
    squared_cycle,
)
from cutcomplex.harness import (
    ACYCLIC_CELL,
    betti_table,
    format_table,
    graph_corpus,
    shellable_within_cap,
    run_suite,
)
from cutcomplex.homology import betti, homology_oracle_snf
from cutcomplex.morse import (
    WedgeOfSpheres,
    element_matching_sequence,
    morse_report,
    preset_schedule,
)


@pytest.fixture
def report(capsys):
    """Print one status line, then fail the test on mismatch or overrun."""

    def emit(label, failures, start, budget_s):
        elapsed = time.perf_counter() - start
        ok = not failures and elapsed < budget_s
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[{status}] {label} ({elapsed:.2f} s, budget {budget_s} s)")
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures, failures[:10]
        assert elapsed < budget_s

    return emit


def _as_sets(masks):
    return {frozenset(i for i in range(64) if m >> i & 1) for m in masks}


# --- 1 ---------------------------------------------------------------------------

# a..f -> 0..5
A, B, C, D, E, F = range(6)
SMALL_EXAMPLE = make_graph(6, [(D, A), (A, B), (B, C), (C, D), (D, E), (D, F)])
SMALL_EXAMPLE_FACETS = [(A, B, D), (A, C, D), (B, C, D), (B, D, E), (B, D, F)]


def test_01_small_example_facets_shelling_contractible(report):
    start = time.perf_counter()
    failures = []
    delta = total_cut_complex(SMALL_EXAMPLE, 3)
    expected = {frozenset(f) for f in SMALL_EXAMPLE_FACETS}
    if _as_sets(delta.facets) != expected or len(delta.facets) != 5:
        failures.append(f"facets {delta.facet_lists()}")
    order = [mask_of(f) for f in SMALL_EXAMPLE_FACETS]
    if not is_shelling(order):
        failures.append("listed order is not a shelling")
    if contractibility_certificate(delta) is None:
        failures.append("no contractibility certificate")
    if betti(delta).nonzero():
        failures.append("nonzero homology")
    report("1 small example: facets, shelling order, contractible", failures, start, 1)


# --- 2 ---------------------------------------------------------------------------


def test_02_complete_bipartite(report):
    start = time.perf_counter()
    failures = []
    for m in range(1, 7):
        for n in range(m, 7):
            G = complete_bipartite(m, n)
            for k in range(2, n + 1):
                delta = total_cut_complex(G, k)
                rep = betti(delta)
                tag = f"K({m},{n}) k={k}"
                if k <= m:
                    d, c = m + n - 2 * k, comb(m - 1, k - 1) * comb(n - 1, k - 1)
                    if rep.nonzero() != {d: c}:
                        failures.append(f"{tag}: betti {rep.nonzero()} != {{{d}: {c}}}")
                    mr = morse_report(delta, element_matching_sequence(delta, preset_schedule("bipartite", m, n)))
                    if mr.certificate != WedgeOfSpheres(d, c):
                        failures.append(f"{tag}: morse {mr.describe()}")
                    if m == k == n and rep.nonzero() != {0: 1}:
                        failures.append(f"{tag}: not S^0")
                    if shellable_within_cap(delta, 12):
                        failures.append(f"{tag}: reported shellable")
                else:
                    if contractibility_certificate(delta) is None or rep.nonzero():
                        failures.append(f"{tag}: not certified contractible")
                    if not shellable_within_cap(delta, 12):
                        failures.append(f"{tag}: reported not shellable")
    report("2 complete bipartite: sphere counts, contractible range, shellability boundary", failures, start, 60)


# --- 3 ---------------------------------------------------------------------------


def test_03_prism(report):
    start = time.perf_counter()
    failures = []
    for n in range(2, 7):
        delta = total_cut_complex(prism(n), 2)
        if betti(delta).nonzero() != {2 * n - 4: n - 1}:
            failures.append(f"n={n}: betti {betti(delta).nonzero()}")
        m = element_matching_sequence(delta, preset_schedule("prism", n))
        cells = [c for c in m.critical if c]
        if len(cells) != n - 1 or any(bin(c).count("1") != 2 * n - 3 for c in cells):
            failures.append(f"n={n}: critical cells {[sorted(_as_sets([c]).pop()) for c in cells]}")
        if not m.empty_matched:
            failures.append(f"n={n}: empty face unmatched")
        if n == 3 and _as_sets(cells) != {frozenset({1, 3, 4}), frozenset({2, 3, 5})}:
            failures.append("n=3: critical cells are not {1,3,4} and {2,3,5}")
    report("3 prism: betti and preset-schedule critical cells", failures, start, 30)


# --- 4 ---------------------------------------------------------------------------


def test_04_chordal(report):
    start = time.perf_counter()
    res = run_suite("chordal", {"n": range(1, 9), "count": [30]})
    failures = [f"{c.params}: {c.expected} != {c.actual} {c.note}" for c in res.cases if not c.passed]
    if res.n_pass != len(res.cases) or not res.cases:
        failures.append(res.summary())
    report(f"4 chordal: vertex decomposable and sphere counts ({len(res.cases)} cases)", failures, start, 180)


# --- 5 ---------------------------------------------------------------------------


def test_05_cycles(report):
    start = time.perf_counter()
    failures = []
    for n in range(4, 15):
        for k in range(2, n // 2 + 1):
            tag = f"C{n} k={k}"
            delta = total_cut_complex(cycle(n), k)
            num = n * comb(n - k, k)
            if num % (n - k) or len(delta.facets) != num // (n - k):
                failures.append(f"{tag}: {len(delta.facets)} facets")
            m = element_matching_sequence(delta, preset_schedule("cycle", n, k))
            cells = [c for c in m.critical if c]
            if len(cells) != 1 or bin(cells[0]).count("1") != n - 2 * k + 1 or not m.empty_matched:
                failures.append(f"{tag}: critical cells {len(cells)}")
            rep = betti(delta)
            if rep.nonzero() != {n - 2 * k: 1}:
                failures.append(f"{tag}: betti {rep.nonzero()}")
            fires = non_shellability_obstruction(delta, rep) is not None
            if fires != (n - 2 * k < n - k - 1):
                failures.append(f"{tag}: obstruction {fires}")
    report("5 cycles: facet count, one critical cell, sphere, obstruction", failures, start, 60)


# --- 6 ---------------------------------------------------------------------------

G33_CRITICAL_COMPLEMENTS = [{0, 3, 4}, {0, 4, 5}, {0, 6, 7}, {0, 7, 8}]


def test_06_grids(report):
    start = time.perf_counter()
    failures = []
    for m, n in [(2, n) for n in range(2, 7)] + [(3, 3), (3, 4)]:
        tag = f"G({m},{n})"
        delta = total_cut_complex(grid(m, n), 2)
        d, c = m * n - 4, (m - 1) * (n - 1)
        if betti(delta).nonzero() != {d: c}:
            failures.append(f"{tag}: betti {betti(delta).nonzero()}")
        mat = element_matching_sequence(delta, preset_schedule("grid", m, n))
        if morse_report(delta, mat).certificate != WedgeOfSpheres(d, c):
            failures.append(f"{tag}: morse {morse_report(delta, mat).describe()}")
        if (m, n) == (3, 3):
            full = frozenset(range(9))
            want = {full - s for s in map(frozenset, G33_CRITICAL_COMPLEMENTS)}
            if _as_sets(c for c in mat.critical if c) != want:
                failures.append(f"{tag}: unexpected critical cells")
    report("6 grids k=2: betti via matrices and preset matching", failures, start, 60)


# --- 7 ---------------------------------------------------------------------------


def test_07_squared_cycles(report):
    start = time.perf_counter()
    failures = []
    w6 = total_cut_complex(squared_cycle(6), 2)
    if _as_sets(w6.facets) != {frozenset({0, 1, 3, 4}), frozenset({1, 2, 4, 5}), frozenset({0, 2, 3, 5})}:
        failures.append(f"W6 facets {w6.facet_lists()}")
    if betti(w6).nonzero() != {1: 1}:
        failures.append(f"W6 betti {betti(w6).nonzero()}")
    for n in range(7, 11):
        delta = total_cut_complex(squared_cycle(n), 2)
        if betti(delta).nonzero() != {n - 4: 1}:
            failures.append(f"W{n}: betti {betti(delta).nonzero()}")
        mat = element_matching_sequence(delta, preset_schedule("squared_cycle", n))
        if morse_report(delta, mat).certificate != WedgeOfSpheres(n - 4, 1):
            failures.append(f"W{n}: morse {morse_report(delta, mat).describe()}")
    report("7 squared cycles: W6 circle, single spheres for n=7..10", failures, start, 30)


# --- 8 ---------------------------------------------------------------------------

V, Z = "void", ACYCLIC_CELL


def _b(d, v):
    return f"β_{d}={v}"


# rows k = 1..8, columns n = 2..6
GRID2_GOLDEN = {
    1: [_b(2, 1), _b(4, 1), _b(6, 1), _b(8, 1), _b(10, 1)],
    2: [_b(0, 1), _b(2, 2), _b(4, 3), _b(6, 4), _b(8, 5)],
    3: [V, _b(0, 1), _b(2, 3), _b(4, 6), _b(6, 10)],
    4: [V, V, _b(0, 1), _b(2, 4), _b(4, 10)],
    5: [V, V, V, _b(0, 1), _b(2, 5)],
    6: [V, V, V, V, _b(0, 1)],
    7: [V, V, V, V, V],
    8: [V, V, V, V, V],
}

# rows k = 1..8, columns n = 3..5
GRID3_GOLDEN = {
    1: [_b(7, 1), _b(10, 1), _b(13, 1)],
    2: [_b(5, 4), _b(8, 6), _b(11, 8)],
    3: [_b(3, 6), _b(6, 15), _b(9, 28)],
    4: [_b(1, 4), _b(4, 20), _b(7, 56)],
    5: [Z, _b(2, 13), _b(5, 67)],
    6: [V, _b(0, 1), _b(3, 42)],
    7: [V, V, _b(1, 7)],
    8: [V, V, Z],
}


def _golden_table(family, m, ns, golden):
    return {"family": family, "m": m, "ns": ns, "rows": {k: dict(zip(ns, row)) for k, row in golden.items()}}


def test_08_betti_tables(report):
    start = time.perf_counter()
    failures = []
    for family, m, ns, golden in [
        ("G2n", 2, list(range(2, 7)), GRID2_GOLDEN),
        ("G3n", 3, list(range(3, 6)), GRID3_GOLDEN),
    ]:
        table = betti_table(family, range(1, 9), ns)
        want = _golden_table(family, m, ns, golden)
        for k in golden:
            for n in ns:
                if table["rows"][k][n] != want["rows"][k][n]:
                    failures.append(f"{family} k={k} n={n}: {table['rows'][k][n]!r} != {want['rows'][k][n]!r}")
        for fmt in ("text", "csv", "md", "json"):
            if format_table(table, fmt) != format_table(want, fmt):
                failures.append(f"{family}: {fmt} output differs")
    report("8 grid Betti tables G(2,n) and G(3,n) cell for cell", failures, start, 300)


# --- 9 ---------------------------------------------------------------------------

STRUCTURAL_SUITES = [
    "nesting",
    "link_lemma",
    "simplicial_deletion",
    "ridge_facet",
    "isolated_decomposition",
    "suspension",
    "les_euler",
]


def test_09_structural_identities(report):
    start = time.perf_counter()
    failures = []
    total = 0
    for suite in STRUCTURAL_SUITES:
        res = run_suite(suite)
        total += len(res.cases)
        if not res.cases:
            failures.append(f"{suite}: no cases")
        failures += [f"{suite} {c.params}: {c.note or 'mismatch'}" for c in res.cases if not c.passed]
    report(f"9 structural identities over the 200-graph corpus ({total} cases)", failures, start, 180)


# --- 10 ---------------------------------------------------------------------------


def test_10_modular_rank_matches_smith_form(report):
    start = time.perf_counter()
    failures = []
    checked = 0
    corpus = graph_corpus()
    assert len(corpus) == 200
    for G in corpus:
        for k in range(1, G.n + 1):
            delta = total_cut_complex(G, k)
            if delta.is_void:
                continue
            try:
                if delta.num_faces() > 1 << 14:
                    continue
            except FaceCapExceeded:
                continue
            fast, slow = betti(delta), homology_oracle_snf(delta)
            checked += 1
            if fast.betti != slow.betti or slow.torsion_found:
                failures.append(f"{G.name} k={k}: {fast.nonzero()} vs {slow.nonzero()} torsion={slow.torsion_found}")
    report(f"10 modular rank equals Smith normal form, no torsion ({checked} complexes)", failures, start, 120)

"""Command line entry point: ``cutcomplex <command> ...``.

Exit codes: 0 success / all checks pass, 1 a mismatch or failed check,
2 usage or input error, 3 a resource cap prevented the computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complex import ResourceCapError, dumps_complex
from .cutgen import cut_complex, total_cut_complex
from .decide import (
    contractibility_certificate,
    find_shelling,
    is_vertex_decomposable,
    non_shellability_obstruction,
)
from .graph import bits, family, loads_graph
from .harness import (
    SUITES,
    betti_table,
    format_table,
    jsonable,
    parse_ranges,
    run_suite,
    sweep_conjecture,
)
from .homology import betti, homology_oracle_snf
from .morse import (
    element_matching_sequence,
    lex_schedule,
    morse_report,
    preset_schedule,
    verify_acyclic,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(arg: str):
    """A graph file in the ``n m`` edge-list format, or a family spec like ``grid:3,4``."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            try:
                return loads_graph(fh.read())
            except ValueError as exc:
                raise UsageError(f"{arg}: {exc}") from None
    try:
        return family(arg)
    except ValueError as exc:
        raise UsageError(f"--graph {arg!r}: not a file and not a family spec ({exc})") from None


def _complex(args):
    G = load_graph(args.graph)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    return G, total_cut_complex(G, args.k)


def _print_json(obj) -> None:
    print(json.dumps(jsonable(obj), indent=2, sort_keys=True, ensure_ascii=False))


def _fmt_betti(nz: dict) -> str:
    return ", ".join(f"b{d}={v}" for d, v in nz.items()) or "all zero"


# --- commands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    G = load_graph(args.graph)
    if args.variant == "cut":
        if args.k < 2:
            raise UsageError("cut complexes need --k >= 2")
        delta = cut_complex(G, args.k)
    else:
        delta = total_cut_complex(G, args.k)
    text = dumps_complex(delta)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(delta.facets)} facet(s) on {delta.n} vertices to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_homology(args) -> int:
    G, delta = _complex(args)
    rep = betti(delta)
    status = EXIT_OK
    oracle = None
    if args.snf:
        oracle = homology_oracle_snf(delta)
        if oracle.betti != rep.betti or oracle.torsion_found:
            status = EXIT_MISMATCH
    if args.json:
        out = rep.to_json(n=G.n, k=args.k)
        if oracle is not None:
            out["snf"] = oracle.to_json()
            out["agree"] = oracle.betti == rep.betti
            out["torsion"] = oracle.torsion_found
        _print_json(out)
        return status
    if rep.void:
        print("void complex")
        return status
    print(f"dim {rep.dim}  f = {list(rep.f)}  reduced euler = {rep.euler_reduced}")
    print(f"reduced betti: {_fmt_betti(rep.nonzero())}")
    if oracle is not None:
        verdict = "agrees" if oracle.betti == rep.betti else "DISAGREES"
        print(f"smith normal form: {_fmt_betti(oracle.nonzero())} ({verdict}; torsion: {oracle.torsion_found})")
    return status


def _schedule(arg: str, spec: str, k: int, delta) -> list[int]:
    if arg == "lex":
        return lex_schedule(delta)
    if arg == "preset":
        if ":" not in spec:
            raise UsageError("--schedule preset needs a family spec for --graph")
        name, _, rest = spec.partition(":")
        params = [int(p) for p in rest.split(",") if p.strip()]
        if name.lower() == "cycle":
            params.append(k)
        try:
            return preset_schedule(name, *params)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
    try:
        return [int(v) for v in arg.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad --schedule {arg!r}") from None


def cmd_morse(args) -> int:
    G, delta = _complex(args)
    schedule = _schedule(args.schedule, args.graph, args.k, delta)
    try:
        m = element_matching_sequence(delta, schedule)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    acyclic = verify_acyclic(delta, m) if args.verify_acyclic else None
    if acyclic is False:
        print("matching is not acyclic")
        return EXIT_MISMATCH
    rep = morse_report(delta, m)
    critical = [bits(c) for c in m.critical]
    if args.json:
        _print_json(
            {
                "n": G.n,
                "k": args.k,
                "schedule": schedule,
                "critical_per_dim": rep.cells_per_dim,
                "critical_cells": critical,
                "empty_matched": rep.empty_matched,
                "certificate": rep.describe(),
                "acyclic_verified": acyclic,
            }
        )
        return EXIT_OK
    print(f"schedule: {schedule}")
    print(f"critical cells per dimension: {rep.cells_per_dim or 'none'}")
    print(f"empty face matched: {rep.empty_matched}")
    for c in critical:
        print(f"  {c}")
    if acyclic:
        print("acyclicity verified")
    print(f"certificate: {rep.describe()}")
    return EXIT_OK


def cmd_check(args) -> int:
    G, delta = _complex(args)
    prop = args.property
    if prop == "vd":
        res = is_vertex_decomposable(delta)
        print(f"vertex decomposable: {bool(res)}")
        if res and args.verbose:
            print(f"decomposition: {res.tree}")
    elif prop == "shelling":
        order = find_shelling(delta, args.facet_cap)
        if order is None:
            print("not shellable (exhaustive search)")
        else:
            print("shelling order:")
            for f in order:
                print(f"  {bits(f)}")
    elif prop == "obstruction":
        if not delta.is_pure():
            raise UsageError("obstruction check needs a pure complex")
        obs = non_shellability_obstruction(delta, betti(delta))
        print(f"obstruction: {obs}" if obs else "no homological obstruction found")
    elif prop == "contractible":
        cert = contractibility_certificate(delta)
        print(f"contractible: {cert}" if cert else "no contractibility certificate found")
    return EXIT_OK


def cmd_verify(args) -> int:
    ranges = parse_ranges(";".join(args.ranges or []))
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if any(s not in SUITES for s in suites):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = [run_suite(s, ranges) for s in suites]
    if args.json:
        _print_json([r.to_json() for r in results])
    else:
        for r in results:
            print(r.summary())
            for c in r.cases:
                if not c.passed:
                    tag = "CAP " if c.capped else "FAIL"
                    print(f"  {tag} {c.params} expected={c.expected} actual={c.actual} {c.note}")
    codes = [r.exit_code() for r in results]
    if EXIT_MISMATCH in codes:
        return EXIT_MISMATCH
    return EXIT_CAP if all(c == EXIT_CAP for c in codes) else EXIT_OK


def cmd_sweep(args) -> int:
    ranges = parse_ranges(";".join(args.ranges or []))
    try:
        rows = sweep_conjecture(args.conjecture, ranges)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _print_json([row.__dict__ for row in rows])
    else:
        for row in rows:
            mark = "ok " if row.match else ("cap" if row.note else "MISMATCH")
            extra = f"  (other branch: {row.alternative})" if row.alternative else ""
            print(f"{mark:8} {row.params} observed={row.observed} predicted={row.predicted}{extra}")
    if rows and all(row.note for row in rows):
        return EXIT_CAP
    return EXIT_OK


def cmd_table(args) -> int:
    ks = range(args.kmin, args.kmax + 1)
    nmin = args.nmin if args.nmin is not None else {"G2n": 2, "G3n": 3, "G4n": 4}.get(args.family, 1)
    try:
        table = betti_table(args.family, ks, range(nmin, args.nmax + 1))
        text = format_table(table, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    cells = [c for row in table["rows"].values() for c in row.values()]
    return EXIT_CAP if cells and all(c == "skipped(cap)" for c in cells) else EXIT_OK


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutcomplex",
        description="Total k-cut complexes of graphs: construction, homology, Morse matchings, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", required=True, help="edge-list file or family spec (grid:3,4, prism:5, wn:9, cycle:8, kmn:2,3)")
        p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("build", help="write the facets of a complex")
    graph_args(p)
    p.add_argument("--variant", choices=("total", "cut"), default="total")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("homology", help="reduced Betti numbers")
    graph_args(p)
    p.add_argument("--snf", action="store_true", help="also run the integer Smith normal form route")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("morse", help="sequential element matching and its certificate")
    graph_args(p)
    p.add_argument("--schedule", default="lex", help="lex, preset, or comma-separated vertices")
    p.add_argument("--verify-acyclic", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_morse)

    p = sub.add_parser("check", help="structural decision procedures")
    graph_args(p)
    p.add_argument("--property", required=True, choices=("vd", "shelling", "obstruction", "contractible"))
    p.add_argument("--facet-cap", type=int, default=12)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"all, {', '.join(SUITES)}")
    p.add_argument("--ranges", action="append", help="e.g. 'n=4..14;k=2..5' (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="compare data with a conjectured formula")
    p.add_argument("--conjecture", required=True, choices=("squared_cycle", "grid_k"))
    p.add_argument("--ranges", action="append")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="Betti table for grid graphs")
    p.add_argument("--family", required=True, choices=("G2n", "G3n", "G4n"))
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "md", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"cutcomplex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"cutcomplex: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())

"""Run every verification suite at default ranges, then compare two conjectured
closed forms against computed homology."""

from cutcomplex.harness import SUITES, run_suite, sweep_conjecture

for suite in SUITES:
    print(run_suite(suite).summary())

for which in ("squared_cycle", "grid_k"):
    rows = sweep_conjecture(which)
    matched = sum(r.match for r in rows)
    print(f"{which}: {matched}/{len(rows)} rows match")
    for r in rows:
        if r.alternative is not None:
            print(f"  {r.params}: observed {r.observed}, other branch would give {r.alternative}")

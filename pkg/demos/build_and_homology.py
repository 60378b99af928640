"""Build total k-cut complexes for a few graphs and print their reduced homology,
checked against the integer Smith normal form route."""

from cutcomplex import betti, family, homology_oracle_snf, total_cut_complex

for spec, k in [("cycle:8", 2), ("cycle:8", 3), ("prism:4", 2), ("grid:3,3", 2), ("kmn:3,4", 2)]:
    delta = total_cut_complex(family(spec), k)
    rep = betti(delta)
    oracle = homology_oracle_snf(delta)
    agree = "agree" if oracle.betti == rep.betti and not oracle.torsion_found else "DISAGREE"
    print(f"{spec:10} k={k}  facets={len(delta.facets):3}  dim={delta.dim}  betti={rep.nonzero()}  ({agree})")

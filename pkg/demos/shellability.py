"""Decide vertex decomposability and shellability on small complexes, and show
the homological obstruction when no shelling exists."""

from cutcomplex import (
    betti,
    contractibility_certificate,
    family,
    find_shelling,
    is_vertex_decomposable,
    non_shellability_obstruction,
    total_cut_complex,
)
from cutcomplex.graph import bits

for spec, k in [("kmn:2,4", 3), ("kmn:2,2", 2), ("cycle:6", 2), ("path:5", 2)]:
    delta = total_cut_complex(family(spec), k)
    vd = bool(is_vertex_decomposable(delta))
    order = find_shelling(delta)
    print(f"{spec} k={k}: {len(delta.facets)} facets, vertex decomposable={vd}")
    if order is not None:
        print(f"  shelling: {[bits(f) for f in order]}")
    else:
        print(f"  no shelling; {non_shellability_obstruction(delta, betti(delta))}")
    cert = contractibility_certificate(delta)
    if cert:
        print(f"  contractible: {cert}")

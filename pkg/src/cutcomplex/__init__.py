"""Total k-cut complexes of graphs: construction, exact homology, discrete Morse
matchings, vertex decomposability and shellability at small scale."""

from .complex import (
    FaceCapExceeded,
    ResourceCapError,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    cone,
    deletion,
    from_facets,
    join,
    link,
    skeleton,
    star,
    suspension,
)
from .cutgen import (
    cut_complex,
    next_total_from_ridges,
    realizability_probe,
    total_cut_complex,
    verify_isolated_decomposition,
)
from .decide import (
    contractibility_certificate,
    find_shelling,
    is_shelling,
    is_vertex_decomposable,
    non_shellability_obstruction,
)
from .graph import Graph, family, independence_number, independent_sets, make_graph
from .homology import BettiReport, betti, euler_characteristic_reduced, homology_oracle_snf
from .morse import element_matching_sequence, morse_report, preset_schedule, verify_acyclic

__version__ = "0.1.0"

"""Interference hypergraphs of planar wireless networks.

Builds the hypergraph of minimal forbidden sets of a network of stations,
computes the interference degree of arbitrary hypergraphs exactly, and
checks realizability of small hypergraphs numerically.
"""

from .geometry import Point2, PolarPoint, dist, g_delta, minimize_g, radial_project
from .hypergraph import (
    Graph,
    Hypergraph,
    HypergraphError,
    TooLargeError,
    are_isomorphic,
    augment_with_apex,
    complete_uniform,
    delta_weight,
    graph_interference_degree,
    independence_number,
    interference_degree,
    is_independent,
    make_graph,
    neighbors,
    normalize,
    star,
)
from .realizability import (
    K15Certificate,
    RealizationSearchConfig,
    RealizationSearchResult,
    check_realization,
    k15_witness,
    search_realization,
    verify_k15_nonrealizable,
)
from .wireless import (
    NetworkError,
    WirelessNetwork,
    energy,
    generate_hypergraph,
    is_forbidden,
    minimal_forbidden_sets,
    normalize_beta,
    scale_network,
    unit_disk_graph,
)

__version__ = "0.1.0"

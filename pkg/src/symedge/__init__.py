"""Exact combinatorics of symmetric edge polytopes.

Facet orientations via vertex layerings, Jaeger trees via ribbon tours,
h*- and gamma-vectors from tail-edge counts, and an independent rational
lattice-point oracle cross-checking everything.
"""

from .errors import BudgetExceededError, CrossCheckError, ParseError
from .facets import (
    FacetGraph,
    WeightFunction,
    enumerate_facet_graphs,
    facet_conormal,
    facet_system,
    facet_value,
    first_facet_graph,
    is_semi_balanced,
    make_weight_function,
)
from .geometry import (
    LatticeSimplex,
    count_lattice_points,
    dissection_spot_check,
    edge_vector,
    ehrhart_hstar_oracle,
    is_unimodular,
    point_in_simplex,
    simplex_for_tree,
    visibility_volume,
)
from .graphs import (
    Basis,
    Graph,
    Ribbon,
    default_basis,
    default_ribbon,
    fundamental_cut,
    random_basis,
    random_ribbon,
    tour_of_tree,
)
from .jaeger import (
    BlockingCut,
    JaegerTree,
    almost_greedy_tree,
    compare_face_by_face,
    compare_quadratic,
    enumerate_all_jaeger,
    enumerate_jaeger_trees,
    gamma_of_graph,
    greedy_tree,
    hstar_of_graph,
    interior_of_bipartite,
    interior_polynomial,
    is_jaeger_tree,
    shelling_report,
    stick_tree,
)
from .polynomials import (
    IntPoly,
    binom_identity_check,
    cycle_gamma,
    cycle_hstar_coefficient,
    gamma_transform,
    hstar_from_histogram,
    hstar_from_lattice_counts,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Spectral radius of graphs with a given order and adjacency rank."""

__version__ = "0.1.0"

from .exact import IntPolynomial, charpoly, largest_real_root, multipartite_charpoly, rank
from .extremal import (
    ExtremalVerdict,
    SearchResult,
    alpha,
    enumerate_connected,
    family_radius,
    min_radius_bounds,
    min_rank5_extremal,
    search_family,
    theorem1_report,
    theorem2_report,
    verify_theorem1,
    verify_theorem2,
)
from .graph import (
    Graph,
    blow_up,
    catalog,
    complete_graph,
    complete_multipartite,
    family_graph,
    turan,
)
from .graph6 import from_graph6, to_graph6
from .spectral import (
    SpectralResult,
    exact_radius,
    is_equitable,
    quotient,
    spectral_radius,
    turan_radius_closed_form,
)

__all__ = [
    "ExtremalVerdict", "Graph", "IntPolynomial", "SearchResult", "SpectralResult",
    "alpha", "blow_up", "catalog", "charpoly", "complete_graph", "complete_multipartite",
    "enumerate_connected", "exact_radius", "family_graph", "family_radius", "from_graph6",
    "is_equitable", "largest_real_root", "min_radius_bounds", "min_rank5_extremal",
    "multipartite_charpoly", "quotient", "rank", "search_family", "spectral_radius",
    "theorem1_report", "theorem2_report", "to_graph6", "turan", "turan_radius_closed_form",
    "verify_theorem1", "verify_theorem2",
]

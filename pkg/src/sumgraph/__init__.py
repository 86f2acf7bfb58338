"""Graph powers ("sumgraphs"), their growth bounds, and small extremal searches."""

from .graph import (
    UNREACHABLE,
    DistanceTable,
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    diameter,
    is_connected,
    min_degree,
    parse_edge_list,
    regular_degree,
    serialize_edge_list,
)
from .power import PowerProfile, edge_growth, power_graph
from .sumsets import ResidueSet, is_basis, sumset_h

__all__ = [
    "UNREACHABLE", "DistanceTable", "Graph", "GraphError", "PowerProfile", "ResidueSet",
    "all_pairs_distances", "build_graph", "diameter", "edge_growth", "is_basis",
    "is_connected", "min_degree", "parse_edge_list", "power_graph", "regular_degree",
    "serialize_edge_list", "sumset_h",
]

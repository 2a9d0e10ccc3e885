"""Exact graphical r-Stirling numbers of the first kind.

Count partitions of a graph's vertices into blocks that are single vertices,
edges, or vertex sets carrying a Hamiltonian cycle (weighted by the number of
directed Hamiltonian cycles), with vertices 1..r forced into distinct blocks.
"""
from .engine import block_weight_table, cached_cycle_polynomial, cycle_polynomial, total_partitions
from .errors import CycleCountError, ParameterError, ParseError, ResourceGuardError
from .graph import (
    FamilySpec,
    LabeledGraph,
    build_composite,
    complement,
    delete_vertices,
    family,
    make_family,
    parse_family,
    parse_graph,
    serialize_graph,
)
from .oracle import brute_force_polynomial
from .poly import Poly, fib, lucas, rising_factorial, sturm_real_rooted
from .stats import MomentSummary, moments_from_polynomial, shape_analysis

__all__ = [
    "CycleCountError", "FamilySpec", "LabeledGraph", "MomentSummary", "ParameterError", "ParseError",
    "Poly", "ResourceGuardError", "block_weight_table", "brute_force_polynomial", "build_composite",
    "cached_cycle_polynomial", "complement", "cycle_polynomial", "delete_vertices", "family", "fib",
    "lucas", "make_family", "moments_from_polynomial", "parse_family", "parse_graph", "rising_factorial",
    "serialize_graph", "shape_analysis", "sturm_real_rooted", "total_partitions",
]
__version__ = "0.1.0"

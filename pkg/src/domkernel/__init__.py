"""Kernelization, region decompositions, and hardness gadgets for domination
variants on planar graphs."""

from .graph import Graph, parse_edge_list, format_edge_list
from .domination import Variant, SolveResult, solve_minimum, enumerate_minimum_sets
from .kernelize import (
    kernelize_double_domination,
    apply_reduction_rule,
    partition_common_neighborhood,
    is_reduced,
)
from .plane import PlaneGraph, build_plane_graph, parse_embedding, format_embedding
from .generators import GeneratorSpec, generate
from .regions import region_decomposition, check_region_bounds, genus_bound
from .gadgets import build_gadget, verify_equivalence

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "parse_edge_list",
    "format_edge_list",
    "Variant",
    "SolveResult",
    "solve_minimum",
    "enumerate_minimum_sets",
    "kernelize_double_domination",
    "apply_reduction_rule",
    "partition_common_neighborhood",
    "is_reduced",
    "PlaneGraph",
    "build_plane_graph",
    "parse_embedding",
    "format_embedding",
    "GeneratorSpec",
    "generate",
    "region_decomposition",
    "check_region_bounds",
    "genus_bound",
    "build_gadget",
    "verify_equivalence",
    "__version__",
]

"""Cycle decompositions, dicycle intersection graphs, and skeletons of
Eulerian digraphs, with second-neighborhood (Seymour vertex) checks."""

from .ci_graph import (
    CIMultigraph,
    InducedCISubgraph,
    Theorem1Report,
    build_ci,
    ci_to_dot,
    clique_single_vertex_witness,
    find_simple_decomposition,
    induced_closed_neighborhood,
    is_block_graph,
    is_simple,
    theorem1_check,
    theorem5_witnesses,
)
from .cycle_decomposition import (
    CycleDecomposition,
    DiCycle,
    ValidationResult,
    enumerate_decompositions,
    greedy_decomposition,
    validate_decomposition,
)
from .digraph_core import (
    ConjectureSums,
    Digraph,
    NeighborhoodReport,
    build_digraph,
    conjecture_sums,
    is_balanced,
    is_dag,
    is_digon_free,
    is_eulerian,
    neighborhood_report,
    second_out_neighborhood,
    seymour_vertices,
)
from .edgelist import EdgeListFile, load_edge_list, parse_edge_list, serialize_edge_list
from .generators import (
    diamond,
    double_triangle,
    enumerate_all_digraphs,
    enumerate_digon_free_digraphs,
    flower,
    nearly_regular_tournament,
    overlapping_squares,
    random_dag,
    random_digraph,
    random_eulerian_digraph,
    rotational_tournament,
    triangle_chain,
    triangle_ring,
    two_disjoint_triangles,
)
from .skeleton import (
    Skeleton,
    SkeletonWitnessReport,
    greedy_skeleton,
    is_invertebrate,
    maximum_skeleton_exact,
    skeleton_seymour_witnesses,
    validate_skeleton,
)
from . import errors

__all__ = [
    "CIMultigraph",
    "ConjectureSums",
    "CycleDecomposition",
    "DiCycle",
    "Digraph",
    "EdgeListFile",
    "InducedCISubgraph",
    "NeighborhoodReport",
    "Skeleton",
    "SkeletonWitnessReport",
    "Theorem1Report",
    "ValidationResult",
    "build_ci",
    "build_digraph",
    "ci_to_dot",
    "clique_single_vertex_witness",
    "conjecture_sums",
    "diamond",
    "double_triangle",
    "enumerate_all_digraphs",
    "enumerate_decompositions",
    "enumerate_digon_free_digraphs",
    "errors",
    "find_simple_decomposition",
    "flower",
    "greedy_decomposition",
    "greedy_skeleton",
    "induced_closed_neighborhood",
    "is_balanced",
    "is_block_graph",
    "is_dag",
    "is_digon_free",
    "is_eulerian",
    "is_invertebrate",
    "is_simple",
    "load_edge_list",
    "maximum_skeleton_exact",
    "nearly_regular_tournament",
    "neighborhood_report",
    "overlapping_squares",
    "parse_edge_list",
    "random_dag",
    "random_digraph",
    "random_eulerian_digraph",
    "rotational_tournament",
    "second_out_neighborhood",
    "serialize_edge_list",
    "seymour_vertices",
    "skeleton_seymour_witnesses",
    "theorem1_check",
    "theorem5_witnesses",
    "triangle_chain",
    "triangle_ring",
    "two_disjoint_triangles",
    "validate_decomposition",
    "validate_skeleton",
]

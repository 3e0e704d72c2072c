"""Exact combinatorics of triangulations of the Moebius strip M_n.

The package enumerates and counts the triangulations of a Moebius strip
with n marked boundary points, exposes the flip operation and flip
graph, and runs the quasi-cluster mutation dynamics those flips induce
on seeds of rational-function variables.
"""

from .arc_model import (Arc, Core, OneSided, TwoSided, all_arcs,
                        arc_from_json, arc_key, arc_to_json, compatible,
                        crossing_number)
from .catalan_polygon import (catalan_number, catalan_numbers,
                              count_polygon_triangulations,
                              polygon_triangulations)
from .enumeration import (count_brute_force, count_closed_form,
                          count_recurrence, convolution_identity_holds,
                          enumerate_triangulations, is_triangulation,
                          least_triangulation, verify_counts)
from .flips import (BoundarySegment, Face, FlipGraph, faces, flip,
                    flip_graph, flip_graph_to_dot, flip_graph_to_json,
                    flip_result, quad_for_flip)
from .quasicluster import (CensusResult, MutationStep, Poly,
                           RationalFunction, Seed, apply_sequence, census,
                           classify_mutation, initial_seed, mutate, seed_for)

__version__ = "0.1.0"

__all__ = [
    "Arc", "BoundarySegment", "CensusResult", "Core", "Face", "FlipGraph",
    "MutationStep", "OneSided", "Poly", "RationalFunction", "Seed",
    "TwoSided", "all_arcs", "apply_sequence", "arc_from_json", "arc_key",
    "arc_to_json", "catalan_number", "catalan_numbers", "census",
    "classify_mutation", "compatible", "convolution_identity_holds",
    "count_brute_force", "count_closed_form",
    "count_polygon_triangulations", "count_recurrence", "crossing_number",
    "enumerate_triangulations", "faces", "flip", "flip_graph",
    "flip_graph_to_dot", "flip_graph_to_json", "flip_result",
    "initial_seed", "is_triangulation", "least_triangulation", "mutate",
    "polygon_triangulations", "quad_for_flip", "seed_for", "verify_counts",
    "__version__",
]

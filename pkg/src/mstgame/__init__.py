"""Submodularity of minimum spanning tree games, with certificates."""

from .instance import (GameInstance, InstanceError, ThresholdGraph,
                       candidate_edges, edge_neighborhood,
                       expensive_neighborhood, threshold_graph)
from .mst import SpanningTree, characteristic, f_uv, greedy_tree, mst, mst_weight
from .oracle import brute_force_submodular, enumerate_violated_cycles
from .recognition import (CycleWitness, Verdict, ViolationTriple,
                          check_condition_i, check_condition_ii, decide,
                          extract_violation, find_bad_diamond, find_bad_hole,
                          find_hole_through, is_well_covered)
from .swide import (SWideInstance, build_auxiliary, check_theorem12_a,
                    check_theorem12_b, is_swide, min_swide_tree)

__all__ = [
    "GameInstance", "InstanceError", "ThresholdGraph", "candidate_edges",
    "edge_neighborhood", "expensive_neighborhood", "threshold_graph",
    "SpanningTree", "characteristic", "f_uv", "greedy_tree", "mst", "mst_weight",
    "brute_force_submodular", "enumerate_violated_cycles",
    "CycleWitness", "Verdict", "ViolationTriple", "check_condition_i",
    "check_condition_ii", "decide", "extract_violation", "find_bad_diamond",
    "find_bad_hole", "find_hole_through", "is_well_covered",
    "SWideInstance", "build_auxiliary", "check_theorem12_a",
    "check_theorem12_b", "is_swide", "min_swide_tree",
]

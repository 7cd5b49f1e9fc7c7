"""Directed Spanning k-Leaf: does a digraph have an out-branching with at least k leaves?"""

from .backward import BackwardReport, backward_arcs, find_heavy_pair, hb_set
from .dp import Decision, NicePathDecomposition, count_leaf_branching, to_nice
from .graph import (
    Digraph,
    InputError,
    InvariantViolation,
    OutTree,
    br_succ,
    extend_to_out_branching,
    leaves,
    reachable_set,
    tree_leq,
)
from .leafy import ArcWitness, annotate, construct_leafy_branching, select_pivot, witness_path
from .local_search import apply_path_changes, improves, one_change, one_optimal_out_branching
from .oracle import brute_force_max_leaves, enumerate_out_branchings, plant, random_digraph
from .pathdecomp import PathDecomposition, build_path_decomposition, check_width_bound, height, validate
from .preprocess import is_useless, remove_useless_arcs
from .solver import solve

__all__ = [
    "ArcWitness", "BackwardReport", "Decision", "Digraph", "InputError", "InvariantViolation",
    "NicePathDecomposition", "OutTree", "PathDecomposition", "annotate", "apply_path_changes",
    "backward_arcs", "br_succ", "brute_force_max_leaves", "build_path_decomposition",
    "check_width_bound", "construct_leafy_branching", "count_leaf_branching",
    "enumerate_out_branchings", "extend_to_out_branching", "find_heavy_pair", "hb_set", "height",
    "improves", "is_useless", "leaves", "one_change", "one_optimal_out_branching", "plant",
    "random_digraph", "reachable_set", "remove_useless_arcs", "select_pivot", "solve", "to_nice",
    "tree_leq", "validate", "witness_path",
]

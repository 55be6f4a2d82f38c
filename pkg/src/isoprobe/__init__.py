"""Monte-Carlo graph isomorphism testing over individualization-refinement trees."""

from .coloring import Coloring, unit_coloring
from .graph import (DimacsError, Graph, Permutation, apply_permutation, compose, invert,
                    is_automorphism, is_isomorphism, parse_dimacs, to_dimacs)
from .refinement import Deviation, RefineMode, Refiner, Trace, individualize, refine, trace_hash
from .selector import select_cell, select_cell_smallest
from .solver import SolverConfig, Verdict, precheck, random_iso
from .walk import leaf_permutation, random_walk, random_walk_deviation, replay_path

__all__ = [
    "Coloring", "Deviation", "DimacsError", "Graph", "Permutation", "RefineMode", "Refiner",
    "SolverConfig", "Trace", "Verdict", "apply_permutation", "compose", "individualize",
    "invert", "is_automorphism", "is_isomorphism", "leaf_permutation", "parse_dimacs",
    "precheck", "random_iso", "random_walk", "random_walk_deviation", "refine", "replay_path",
    "select_cell", "select_cell_smallest", "to_dimacs", "trace_hash", "unit_coloring",
]

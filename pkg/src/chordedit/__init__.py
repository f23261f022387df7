"""Chordal editing with separate budgets for vertex deletions, edge deletions and edge additions."""

from .chordality import clique_tree, is_chordal
from .generate import plant_edits, random_chordal
from .graph import EditingSet, Graph, SizeTriple, apply_editing
from .graphio import format_graph, parse_graph
from .holes import shortest_hole
from .separators import find_mixed_separator, min_b_profile
from .solver import SolverConfig, SolverStats, solve

__all__ = [
    "EditingSet",
    "Graph",
    "SizeTriple",
    "SolverConfig",
    "SolverStats",
    "apply_editing",
    "clique_tree",
    "find_mixed_separator",
    "format_graph",
    "is_chordal",
    "min_b_profile",
    "parse_graph",
    "plant_edits",
    "random_chordal",
    "shortest_hole",
    "solve",
]

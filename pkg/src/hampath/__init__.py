"""Hamiltonian paths, obstacle certificates and two-path covers in graphs of
independence number at most 4."""

from .graph import (
    Graph,
    GraphError,
    from_edges,
    induced,
    is_cover_valid,
    is_path_valid,
)
from .connectivity import (
    CutDecomposition,
    PathFan,
    articulation_points,
    components,
    min_cut_size_at_most,
    path_fan,
    two_cuts_containing,
)
from .independence import ClassLabel, classify, has_independent_set
from .oracle import OracleBudget, OracleBudgetExceeded, brute_ham_path, brute_pc_uv, exact_alpha
from .verdicts import Obstacle, Verdict, WrongClassError

__all__ = [
    "Graph",
    "GraphError",
    "from_edges",
    "induced",
    "is_path_valid",
    "is_cover_valid",
    "CutDecomposition",
    "PathFan",
    "components",
    "articulation_points",
    "min_cut_size_at_most",
    "two_cuts_containing",
    "path_fan",
    "ClassLabel",
    "classify",
    "has_independent_set",
    "OracleBudget",
    "OracleBudgetExceeded",
    "brute_ham_path",
    "brute_pc_uv",
    "exact_alpha",
    "Obstacle",
    "Verdict",
    "WrongClassError",
]

__version__ = "0.1.0"

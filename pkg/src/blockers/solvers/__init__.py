"""Polynomial-time blocker algorithms for specific graph classes.

Every solver checks its class precondition and raises
:class:`~blockers.errors.NotInClassError` when it fails.
"""

from __future__ import annotations

from .common import SolverAnswer
from .tree import tree_contraction_blocker_alpha
from .cograph import CographTable, cograph_blocker, cograph_decide
from .split import split_contraction_blocker
from .interval import interval_contraction_blocker, interval_deletion_blocker
from .bipartite import bipartite_deletion_blocker, cobipartite_deletion_blocker_alpha
from .colouring import (contraction_blocker_chi_3p1free, decompose_p1p3free,
                        deletion_blocker_chi_3p1free, deletion_blocker_chi_p1p3free)
from .trianglefree import triangle_free_contraction_blocker_omega

__all__ = [
    "SolverAnswer", "tree_contraction_blocker_alpha",
    "CographTable", "cograph_blocker", "cograph_decide",
    "split_contraction_blocker",
    "interval_contraction_blocker", "interval_deletion_blocker",
    "bipartite_deletion_blocker", "cobipartite_deletion_blocker_alpha",
    "contraction_blocker_chi_3p1free", "deletion_blocker_chi_3p1free",
    "decompose_p1p3free", "deletion_blocker_chi_p1p3free",
    "triangle_free_contraction_blocker_omega",
]

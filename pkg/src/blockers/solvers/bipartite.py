"""Deletion blockers on bipartite graphs (omega, chi) and cobipartite graphs (alpha).

On a bipartite graph omega and chi are at most two, so lowering them to
one means deleting a vertex cover, found from a maximum matching.
"""

from __future__ import annotations

from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Delete, Graph, complement
from ..params import Parameter, is_bipartite, min_vertex_cover_bipartite
from .common import SolverAnswer, from_min_k


def bipartite_deletion_blocker(g: Graph, pi, d: int, k: Optional[int] = None) -> SolverAnswer:
    pi = Parameter.parse(pi)
    if pi is Parameter.ALPHA:
        raise PreconditionError("the bipartite solver handles omega and chi only")
    if d < 0 or (k is not None and k < 0):
        raise PreconditionError("d and k must be non-negative")
    if not is_bipartite(g):
        raise NotInClassError("input is not bipartite")
    value = 0 if g.n == 0 else (2 if g.m else 1)
    if d == 0:
        return from_min_k(0, k, [])
    target = value - d
    if target < 0:
        return SolverAnswer(False)
    if target == 0:
        return from_min_k(g.n, k, [Delete(v) for v in g.vertices])
    cover = sorted(min_vertex_cover_bipartite(g))
    return from_min_k(len(cover), k, [Delete(v) for v in cover])


def cobipartite_deletion_blocker_alpha(g: Graph, d: int, k: Optional[int] = None) -> SolverAnswer:
    """Deletions commute with complementation, and alpha of a graph is
    omega of its complement."""
    co = complement(g)
    if not is_bipartite(co):
        raise NotInClassError("input is not cobipartite")
    return bipartite_deletion_blocker(co, Parameter.OMEGA, d, k)

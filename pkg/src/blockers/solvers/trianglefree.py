"""Contraction blocker for omega on triangle-free graphs.

Contracting an edge of a triangle-free graph never lowers omega below
two while an edge survives, so omega drops by one exactly when every
component with an edge has been contracted to a single vertex.
"""

from __future__ import annotations

from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Contract, Graph, connected_components
from ..recognize import find_induced, named_graph
from .common import SolverAnswer, from_min_k


def triangle_free_contraction_blocker_omega(g: Graph, d: int,
                                            k: Optional[int] = None) -> SolverAnswer:
    if d < 0 or (k is not None and k < 0):
        raise PreconditionError("d and k must be non-negative")
    tri = find_induced(g, named_graph("K3"))
    if tri is not None:
        raise NotInClassError(f"triangle on {sorted(tri.values())}")
    if d == 0:
        return from_min_k(0, k, [])
    if d >= 2 or g.m == 0:
        return SolverAnswer(False)
    ops = []
    for comp in connected_components(g):
        if len(comp) > 1:
            ops += _spanning_contractions(g, comp)
    return from_min_k(len(ops), k, ops)


def _spanning_contractions(g: Graph, comp) -> list:
    root = min(comp)
    order, parent = [root], {}
    for x in order:
        for y in sorted(g.neighbors(x)):
            if y not in parent and y != root:
                parent[y] = x
                order.append(y)
    return [Contract(y, parent[y]) for y in reversed(order[1:])]

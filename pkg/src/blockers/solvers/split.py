"""Contraction blockers on split graphs for a fixed drop ``d``.

Only the branches with a small budget (at most ``d`` contractions) search
exhaustively, so the running time is polynomial for every fixed ``d``.
"""

from __future__ import annotations

from ..errors import NotInClassError, PreconditionError
from ..graph import Contract, Graph, connected_components, induced_subgraph
from ..params import Parameter, alpha, chi
from ..recognize import split_partition
from .common import SolverAnswer, search_contractions


def split_contraction_blocker(g: Graph, pi, d: int, k: int) -> SolverAnswer:
    pi = Parameter.parse(pi)
    if d < 0 or k < 0:
        raise PreconditionError("d and k must be non-negative")
    if split_partition(g) is None:
        raise NotInClassError("input is not a split graph")
    if d == 0:
        return SolverAnswer(True, [])
    if pi is Parameter.ALPHA:
        return _alpha(g, d, k)
    # split graphs are perfect and stay split under contraction
    return _chi(g, d, k)


def _alpha(g: Graph, d: int, k: int) -> SolverAnswer:
    part = split_partition(g, "minimal")
    attached = sorted(v for v in part.I if g.neighbors(v) & part.K)
    if len(attached) <= d:
        # the component holding the clique would have to vanish
        return SolverAnswer(False)
    if k >= d + 1:
        ops = [Contract(v, min(g.neighbors(v) & part.K)) for v in attached[:d + 1]]
        return SolverAnswer(True, ops)
    target = len(part.I) - d
    ops = search_contractions(g, lambda h: alpha(h, limit=None), target, k)
    return SolverAnswer(ops is not None, ops)


def _chi(g: Graph, d: int, k: int) -> SolverAnswer:
    value = chi(g, limit=None)
    if value <= d:
        return SolverAnswer(False)
    if value == d + 1:
        big = [c for c in connected_components(g) if len(c) > 1]
        if not big:
            return SolverAnswer(True, [])
        comp = big[0]
        if k < len(comp) - 1:
            return SolverAnswer(False)
        return SolverAnswer(True, _collapse(induced_subgraph(g, comp)))
    if k < d:
        return SolverAnswer(False)
    if k == d:
        ops = search_contractions(g, lambda h: chi(h, limit=None), value - d, k)
        return SolverAnswer(ops is not None, ops)
    part = split_partition(g, "maximal")
    clique = sorted(part.K)
    ops = [Contract(v, clique[0]) for v in clique[1:d + 2]]
    return SolverAnswer(True, ops)


def _collapse(comp: Graph) -> list:
    """Contract a connected graph to one vertex along a search tree."""
    root = comp.vertices[0]
    order, seen = [root], {root}
    parent = {}
    for x in order:
        for y in sorted(comp.neighbors(x)):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                order.append(y)
    # leaves first, so every contraction target still exists
    return [Contract(y, parent[y]) for y in reversed(order[1:])]

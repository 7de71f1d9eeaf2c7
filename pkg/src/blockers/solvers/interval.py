"""Greedy blockers for omega (equivalently chi) on interval graphs.

Both variants repeatedly look at the leftmost maximal clique that is still
too large.  The contraction variant merges the two intervals of that clique
reaching furthest right; the merged vertex gets their union.  The deletion
variant removes the interval reaching furthest right.  Ties on the right
endpoint go to the larger vertex id.
"""

from __future__ import annotations

from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Contract, Delete, Graph
from ..params import Parameter
from ..recognize import IntervalModel, clique_path, validate_interval_model
from .common import SolverAnswer, from_min_k


def _check(model: IntervalModel, pi, d: int, graph: Optional[Graph]) -> None:
    if Parameter.parse(pi) is Parameter.ALPHA:
        raise PreconditionError("interval solvers handle omega and chi only")
    if d < 0:
        raise PreconditionError("d must be non-negative")
    if graph is not None and not validate_interval_model(graph, model):
        raise NotInClassError("the interval model does not realise the graph")


def _omega(intervals: dict[int, tuple[int, int]]) -> int:
    return max((len(c) for c in clique_path(IntervalModel(intervals))), default=0)


def _oversized(intervals: dict[int, tuple[int, int]], target: int):
    for clique in clique_path(IntervalModel(intervals)):
        if len(clique) > target:
            return clique
    return None


def _rightmost(intervals, clique) -> list[int]:
    return sorted(clique, key=lambda v: (intervals[v][1], v), reverse=True)


def interval_contraction_blocker(model: IntervalModel, pi, d: int, k: Optional[int] = None,
                                 graph: Optional[Graph] = None) -> SolverAnswer:
    _check(model, pi, d, graph)
    intervals = dict(model.intervals)
    target = _omega(intervals) - d
    if d == 0:
        return from_min_k(0, k, [])
    if target <= 0:
        return SolverAnswer(False)
    ops = []
    while (clique := _oversized(intervals, target)) is not None:
        keep, gone = _rightmost(intervals, clique)[:2]
        (l1, r1), (l2, r2) = intervals[keep], intervals.pop(gone)
        intervals[keep] = (min(l1, l2), max(r1, r2))
        ops.append(Contract(gone, keep))
    return from_min_k(len(ops), k, ops)


def interval_deletion_blocker(model: IntervalModel, pi, d: int, k: Optional[int] = None,
                              graph: Optional[Graph] = None) -> SolverAnswer:
    _check(model, pi, d, graph)
    intervals = dict(model.intervals)
    target = _omega(intervals) - d
    if d == 0:
        return from_min_k(0, k, [])
    if target < 0:
        return SolverAnswer(False)
    ops = []
    while (clique := _oversized(intervals, target)) is not None:
        victim = _rightmost(intervals, clique)[0]
        del intervals[victim]
        ops.append(Delete(victim))
    return from_min_k(len(ops), k, ops)

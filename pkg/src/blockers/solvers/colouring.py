"""Chromatic-number blockers on graphs with independence number at most two
and on (P1+P3)-free graphs.

With no independent triple, colour classes have at most two vertices, so
an optimal colouring is a maximum matching of the complement.  Two classes
span at most four vertices and can be merged into one by at most three
contractions, which bounds the contraction search by ``3d``.
"""

from __future__ import annotations

from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Delete, Graph, complement, connected_components, induced_subgraph
from ..params import chi_3p1free, has_independent_triple, maximum_matching
from ..recognize import is_p1p3_free, is_triangle_free
from .cograph import cograph_blocker
from .common import SolverAnswer, from_min_k, search_contractions


def _require_3p1free(g: Graph) -> None:
    if has_independent_triple(g):
        raise NotInClassError("graph has three pairwise non-adjacent vertices")


def _check_budget(d: int, k: Optional[int]) -> None:
    if d < 0 or (k is not None and k < 0):
        raise PreconditionError("d and k must be non-negative")


def contraction_blocker_chi_3p1free(g: Graph, d: int, k: int) -> SolverAnswer:
    _check_budget(d, k)
    _require_3p1free(g)
    if d == 0:
        return SolverAnswer(True, [])
    value, _ = chi_3p1free(g)
    if value - d <= 0:
        return SolverAnswer(False)
    ops = search_contractions(g, lambda h: chi_3p1free(h)[0], value - d, min(k, 3 * d))
    return SolverAnswer(ops is not None, ops)


def min_deletions_3p1free(n: int, value: int, singles: int, d: int) -> Optional[int]:
    """Fewest deletions lowering chi by ``d`` given ``singles`` one-vertex
    colour classes; each further unit past those costs a pair of vertices."""
    if d <= 0:
        return 0
    if d > value:
        return None
    return d if d <= singles else 2 * d - singles


def deletion_blocker_chi_3p1free(g: Graph, d: int, k: Optional[int] = None) -> SolverAnswer:
    _check_budget(d, k)
    _require_3p1free(g)
    value, singles = chi_3p1free(g)
    need = min_deletions_3p1free(g.n, value, singles, d)
    if need is None:
        return SolverAnswer(False)
    pairs = sorted(maximum_matching(complement(g)))
    paired = {v for e in pairs for v in e}
    lonely = [v for v in g.vertices if v not in paired]
    ops = [Delete(v) for v in lonely[:d]]
    for a, b in pairs[:max(0, d - len(lonely))]:
        ops += [Delete(a), Delete(b)]
    return from_min_k(need, k, ops)


def drop_3p1free(value: int, singles: int, budget: int) -> int:
    """Largest chi drop with at most ``budget`` deletions."""
    if budget <= singles:
        return min(budget, value)
    return min(value, singles + (budget - singles) // 2)


def decompose_p1p3free(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """``(A, B)``: A collects the complement's triangle-free components,
    B the remaining (complete multipartite) ones."""
    if not is_p1p3_free(g):
        raise NotInClassError("graph contains an induced P1+P3")
    co = complement(g)
    a: set[int] = set()
    for comp in connected_components(co):
        if is_triangle_free(induced_subgraph(co, comp)):
            a |= comp
    return frozenset(a), frozenset(g.vertices) - a


def deletion_blocker_chi_p1p3free(g: Graph, d: int, k: Optional[int] = None) -> SolverAnswer:
    """A is complete to B, so chi adds up over the two parts and the budget
    is split between them.  No witness is produced."""
    _check_budget(d, k)
    part_a, part_b = decompose_p1p3free(g)
    ga, gb = induced_subgraph(g, part_a), induced_subgraph(g, part_b)
    value_a, singles_a = chi_3p1free(ga)
    row = cograph_blocker(gb, "chi", 0, g.n).root

    def best(budget: int) -> int:
        return max(drop_3p1free(value_a, singles_a, budget - kb) + row[(0, kb)]
                   for kb in range(budget + 1))

    if d == 0:
        return from_min_k(0, k)
    need = next((b for b in range(g.n + 1) if best(b) >= d), None)
    return from_min_k(need, k)

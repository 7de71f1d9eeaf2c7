"""Contraction blocker for alpha on trees.

On a tree alpha = n - mu.  Contracting an edge at a vertex missed by a
maximum matching lowers alpha by one; once the matching is perfect, each
further unit costs two contractions (a matched edge, then the merged
vertex into a neighbour).
"""

from __future__ import annotations

from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Contract, Graph, contract_edge
from ..params import maximum_matching
from ..recognize import is_tree
from .common import SolverAnswer, from_min_k


def tree_min_contractions(n: int, mu: int, d: int) -> Optional[int]:
    """Fewest contractions lowering alpha by ``d``; None if impossible."""
    if d <= 0:
        return 0
    if d >= n - mu:
        return None
    free = n - 2 * mu
    return d if d <= free else 2 * (d + mu) - n


def tree_contraction_blocker_alpha(t: Graph, d: int, k: Optional[int] = None) -> SolverAnswer:
    if d < 0 or (k is not None and k < 0):
        raise PreconditionError("d and k must be non-negative")
    if not is_tree(t):
        raise NotInClassError("input is not a tree")
    matching = maximum_matching(t)
    n, mu = t.n, len(matching)
    need = tree_min_contractions(n, mu, d)
    if need is None:
        return SolverAnswer(False, None, None)
    witness = _witness(t, matching, d) if k is None or need <= k else None
    return from_min_k(need, k, witness)


def _witness(t: Graph, matching, d: int) -> list:
    mate: dict[int, int] = {}
    for a, b in matching:
        mate[a], mate[b] = b, a
    ops = []
    g = t
    free = [v for v in t.vertices if v not in mate]
    for u in free[:d]:
        # neighbours of an unmatched vertex are matched, and matched
        # vertices are never removed in this phase
        w = min(g.neighbors(u))
        ops.append(Contract(u, w))
        g = contract_edge(g, u, w)
    for _ in range(d - len(free[:d])):
        a, b = min((a, b) for a, b in matching if a in g and b in g)
        ops.append(Contract(a, b))
        g = contract_edge(g, a, b)
        c = min(g.neighbors(b))
        ops.append(Contract(b, c))
        g = contract_edge(g, b, c)
    return ops

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graph import Operation


@dataclass
class SolverAnswer:
    """``decision`` for the asked budget; ``witness`` when the algorithm is
    constructive; ``min_k`` when it computes the optimum (None if infeasible
    or not computed)."""
    decision: bool
    witness: Optional[list[Operation]] = None
    min_k: Optional[int] = None


def from_min_k(min_k: Optional[int], k: Optional[int], witness=None) -> SolverAnswer:
    """Answer for budget ``k`` given an optimum (None means infeasible).

    With ``k`` None the decision reports feasibility alone.
    """
    if min_k is None:
        return SolverAnswer(False, None, None)
    ok = k is None or min_k <= k
    return SolverAnswer(ok, witness if ok else None, min_k)


def search_contractions(g, value, target: int, budget: int):
    """All contraction sequences of length at most ``budget``, breadth first,
    merging isomorphic intermediate graphs.  Returns the first sequence whose
    result has ``value(result) <= target``, or None."""
    from ..canonical import canonical_form
    from ..graph import Contract, contract_edge

    if value(g) <= target:
        return []
    seen = {canonical_form(g)}
    level = [(g, [])]
    for _ in range(budget):
        nxt = []
        for h, path in level:
            for u, v in h.edges():
                child = contract_edge(h, u, v)
                key = canonical_form(child)
                if key in seen:
                    continue
                seen.add(key)
                cpath = path + [Contract(u, v)]
                if value(child) <= target:
                    return cpath
                nxt.append((child, cpath))
        level = nxt
    return None

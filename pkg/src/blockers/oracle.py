"""Exhaustive ground truth for blocker instances on small graphs.

Deletion instances are searched subset by subset in order of size.
Contraction instances are searched level by level (one level per
contraction), with isomorphic intermediate graphs merged through
:func:`canonical_form`.  Every operation lowers alpha, omega and chi by at
most one (contraction can raise omega and chi, never lower them by two),
so states that cannot reach the target within the remaining budget are
dropped.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .canonical import canonical_form
from .errors import PreconditionError, SizeGuardError, WitnessError
from .graph import (Contract, Delete, Graph, Operation, apply_witness,
                    contract_edge, delete_vertex, format_edge_list,
                    parse_edge_list)
from .params import Parameter, _bits, _clique_search, _colour_with, parameter_value

__all__ = [
    "KINDS", "BlockerInstance", "OracleResult",
    "oracle_min_k", "oracle_decide", "verify_witness",
    "oracle_drop_table", "oracle_best_drop", "default_size_guard",
]

KINDS = ("contract", "delete")
_DEFAULT_GUARD = {"contract": 10, "delete": 14}
_UNSET = object()


def default_size_guard(kind: str) -> int:
    env = os.environ.get("BLOCKER_SIZE_GUARD")
    if env:
        return int(env)
    return _DEFAULT_GUARD[kind]


def _check_guard(g: Graph, kind: str, size_guard) -> None:
    limit = default_size_guard(kind) if size_guard is _UNSET else size_guard
    if limit is not None and g.n > limit:
        raise SizeGuardError(
            f"{g.n} vertices exceeds the oracle limit {limit} for {kind} instances")


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown operation kind {kind!r}; expected contract or delete")
    return kind


@dataclass(frozen=True)
class BlockerInstance:
    """Can ``graph`` be changed by at most ``k`` operations of type ``kind``
    so that ``pi`` drops by at least ``d``?"""
    graph: Graph
    pi: Parameter
    kind: str
    d: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "pi", Parameter.parse(self.pi))
        _check_kind(self.kind)
        if self.d < 0 or self.k < 0:
            raise PreconditionError("d and k must be non-negative")

    def to_dict(self) -> dict:
        return {"graph": format_edge_list(self.graph), "pi": self.pi.value,
                "kind": self.kind, "d": self.d, "k": self.k}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "BlockerInstance":
        missing = {"graph", "pi", "kind", "d", "k"} - set(data)
        if missing:
            raise PreconditionError(f"instance is missing fields {sorted(missing)}")
        return cls(parse_edge_list(data["graph"]), data["pi"], data["kind"],
                   int(data["d"]), int(data["k"]))

    @classmethod
    def from_json(cls, text: str) -> "BlockerInstance":
        return cls.from_dict(json.loads(text))


@dataclass
class OracleResult:
    feasible: bool
    min_k: Optional[int]
    witness: Optional[list[Operation]] = field(default=None)


# -- fast parameter evaluation on vertex subsets ------------------------------

def _sub_masks(masks: list[int], s: int) -> list[int]:
    idx = list(_bits(s))
    pos = {v: i for i, v in enumerate(idx)}
    out = []
    for v in idx:
        row = 0
        for w in _bits(masks[v] & s):
            row |= 1 << pos[w]
        out.append(row)
    return out


def _subset_value(masks: list[int], comasks: list[int], s: int, pi: Parameter) -> int:
    if pi is Parameter.OMEGA:
        return _clique_search(masks, s).bit_count()
    if pi is Parameter.ALPHA:
        return _clique_search(comasks, s).bit_count()
    if s == 0:
        return 0
    sub = _sub_masks(masks, s)
    q = _clique_search(sub, (1 << len(sub)) - 1).bit_count()
    while _colour_with(sub, q) is None:
        q += 1
    return q


# -- searches -----------------------------------------------------------------

def _deletion_search(g: Graph, pi: Parameter, target: int, budget: int,
                     start: int) -> Optional[list[Operation]]:
    order, masks = g.index()
    n = len(order)
    full = (1 << n) - 1
    comasks = [full & ~m & ~(1 << i) for i, m in enumerate(masks)]
    for size in range(start, min(budget, n) + 1):
        for removed in combinations(range(n), size):
            s = full
            for v in removed:
                s &= ~(1 << v)
            if _subset_value(masks, comasks, s, pi) <= target:
                return [Delete(order[v]) for v in removed]
    return None


def _contraction_search(g: Graph, pi: Parameter, target: int,
                        budget: int) -> Optional[list[Operation]]:
    seen = {canonical_form(g)}
    level = [(g, [])]
    for step in range(1, budget + 1):
        remaining = budget - step
        nxt = []
        for h, path in level:
            for u, v in h.edges():
                child = contract_edge(h, u, v)
                key = canonical_form(child)
                if key in seen:
                    continue
                seen.add(key)
                value = parameter_value(child, pi, limit=None)
                cpath = path + [Contract(u, v)]
                if value <= target:
                    return cpath
                if value - remaining > target:
                    continue
                nxt.append((child, cpath))
        if not nxt:
            return None
        level = nxt
    return None


def oracle_min_k(g: Graph, pi, kind: str, d: int, budget: Optional[int] = None,
                 size_guard=_UNSET) -> OracleResult:
    """Exact minimum number of operations lowering ``pi`` by at least ``d``.

    ``budget`` caps the search (default: exhaustive).  If no sequence of at
    most ``budget`` operations works the result is infeasible.
    """
    pi = Parameter.parse(pi)
    _check_kind(kind)
    if d < 0:
        raise PreconditionError("d must be non-negative")
    if d == 0:
        return OracleResult(True, 0, [])
    _check_guard(g, kind, size_guard)
    full_budget = g.n if kind == "delete" else max(g.n - 1, 0)
    budget = full_budget if budget is None else min(budget, full_budget)
    target = parameter_value(g, pi, limit=None) - d
    if target < 0 or (kind == "contract" and target == 0):
        # a non-empty graph keeps at least one vertex under contraction
        return OracleResult(False, None, None)
    if kind == "delete":
        # every deletion lowers pi by at most one
        ops = _deletion_search(g, pi, target, budget, start=d)
    else:
        ops = _contraction_search(g, pi, target, budget)
    if ops is None:
        return OracleResult(False, None, None)
    return OracleResult(True, len(ops), ops)


def oracle_decide(instance: BlockerInstance, size_guard=_UNSET) -> OracleResult:
    """Yes iff some sequence of at most ``k`` operations succeeds."""
    res = oracle_min_k(instance.graph, instance.pi, instance.kind, instance.d,
                       budget=instance.k, size_guard=size_guard)
    if res.feasible and res.min_k <= instance.k:
        return res
    return OracleResult(False, None, None)


def verify_witness(instance: BlockerInstance, witness: list[Operation],
                   limit: Optional[int] = None) -> bool:
    """Replay ``witness`` and check the parameter target.

    Replay failures and operations of the wrong kind raise
    :class:`WitnessError`; a witness longer than ``k`` is rejected.
    """
    if len(witness) > instance.k:
        return False
    want = Contract if instance.kind == "contract" else Delete
    for i, op in enumerate(witness):
        if not isinstance(op, want):
            raise WitnessError(i, f"{instance.kind} instances only allow {instance.kind} operations")
    final = apply_witness(instance.graph, witness)
    before = parameter_value(instance.graph, instance.pi, limit=limit)
    return parameter_value(final, instance.pi, limit=limit) <= before - instance.d


# -- mixed contraction/deletion drop tables -----------------------------------------

def oracle_drop_table(g: Graph, pi, total: int, size_guard=_UNSET) -> dict[tuple[int, int], int]:
    """Best drop of ``pi`` with at most ``i`` contractions and at most ``j``
    deletions, for every ``i + j <= total``."""
    pi = Parameter.parse(pi)
    _check_guard(g, "contract", size_guard)
    base = parameter_value(g, pi, limit=None)
    values: dict[tuple, int] = {}

    def value(h: Graph, key: tuple) -> int:
        if key not in values:
            values[key] = parameter_value(h, pi, limit=None)
        return values[key]

    layers: dict[tuple[int, int], dict[tuple, Graph]] = {(0, 0): {canonical_form(g): g}}
    exact: dict[tuple[int, int], int] = {(0, 0): base}
    for s in range(1, total + 1):
        for i in range(s + 1):
            j = s - i
            states: dict[tuple, Graph] = {}
            for h in layers.get((i - 1, j), {}).values():
                for u, v in h.edges():
                    child = contract_edge(h, u, v)
                    states.setdefault(canonical_form(child), child)
            for h in layers.get((i, j - 1), {}).values():
                for v in h.vertices:
                    child = delete_vertex(h, v)
                    states.setdefault(canonical_form(child), child)
            layers[(i, j)] = states
            if states:
                exact[(i, j)] = min(value(h, key) for key, h in states.items())
    table = {}
    for i in range(total + 1):
        for j in range(total + 1 - i):
            best = 0
            for (a, b), low in exact.items():
                if a <= i and b <= j:
                    best = max(best, base - low)
            table[(i, j)] = best
    return table


def oracle_best_drop(g: Graph, pi, k: int, l: int, size_guard=_UNSET) -> int:
    return oracle_drop_table(g, pi, k + l, size_guard)[(k, l)]

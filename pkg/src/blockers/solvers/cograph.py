"""Dynamic programme over the binary cotree for blockers on cographs.

For every cotree node x the table maps ``(i, j)`` to the largest drop of
the parameter reachable on G_x with at most ``i`` contractions and at most
``j`` deletions.  Contractions inside a union node stay inside one side.
At a join node a contraction may also merge a vertex of each side; the
merged vertex sees everything, so it acts like deleting one vertex on each
side and adding a universal vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import NotInClassError, PreconditionError
from ..graph import Graph
from ..params import Parameter
from ..recognize import Cotree, CotreeLeaf, cotree
from .common import SolverAnswer

Table = dict[tuple[int, int], int]


@dataclass
class CographTable:
    """Per-node tables; ``root`` is the table of the whole graph."""
    pi: Parameter
    budget: int
    value: int
    root: Table
    nodes: list[tuple[Cotree, Table]] = field(default_factory=list)

    def max_drop(self, i: int, j: int) -> int:
        if i + j > self.budget:
            raise PreconditionError(f"({i}, {j}) exceeds the table budget {self.budget}")
        return self.root[(i, j)]


def _cells(total: int):
    for i in range(total + 1):
        for j in range(total + 1 - i):
            yield i, j


def _leaf(total: int) -> Table:
    return {(i, j): 1 if j >= 1 else 0 for i, j in _cells(total)}


def _union_alpha(ty: Table, tz: Table, total: int) -> Table:
    out = {}
    for i, j in _cells(total):
        out[(i, j)] = max(ty[(a, b)] + tz[(i - a, j - b)]
                          for a in range(i + 1) for b in range(j + 1))
    return out


def _join_alpha(ty: Table, tz: Table, ny: int, nz: int, ay: int, az: int,
                total: int) -> Table:
    ax = max(ay, az)
    out = {}
    for i, j in _cells(total):
        if i + j >= ny + nz and j >= 1:
            out[(i, j)] = ax
            continue
        best = min(max(ay - ty[(a, b)], az - tz[(i - a, j - b)])
                   for a in range(i + 1) for b in range(j + 1))
        # c >= 1 contractions across the join, forming a matching
        for a_y in range(i):
            for a_z in range(i - a_y):
                c = i - a_y - a_z
                for b in range(j + 1):
                    # each cross contraction removes one vertex per side
                    vy = ay - ty[(a_y, b + c)]
                    vz = az - tz[(a_z, j - b + c)]
                    best = min(best, max(1, vy, vz))
        out[(i, j)] = ax - best
    return out


def _union_chi(ty: Table, tz: Table, cy: int, cz: int, total: int) -> Table:
    cx = max(cy, cz)
    out = {}
    for i, j in _cells(total):
        low = min(max(cy - ty[(a, b)], cz - tz[(i - a, j - b)])
                  for a in range(i + 1) for b in range(j + 1))
        out[(i, j)] = cx - low
    return out


def _join_chi(ty: Table, tz: Table, ny: int, nz: int, cy: int, cz: int,
              total: int) -> Table:
    cx = cy + cz
    out = {}
    for i, j in _cells(total):
        if i + j >= ny + nz and j >= 1:
            out[(i, j)] = cx
            continue
        best = max(ty[(a, b)] + tz[(i - a, j - b)]
                   for a in range(i + 1) for b in range(j + 1))
        low = cx - best
        # cross contractions: f of the c cross contractions start new merged
        # vertices; the rest grow them or act as extra deletions
        for a_y in range(i):
            for a_z in range(i - a_y):
                c = i - a_y - a_z
                for f in range(1, min(c, ny, nz) + 1):
                    spare = (c - f) + j
                    u = min(f, min(c - f, f - 1) + j)
                    s = spare - u
                    for s_y in range(s + 1):
                        ky, kz = (a_y, f + s_y), (a_z, f + s - s_y)
                        if sum(ky) > total or sum(kz) > total:
                            continue
                        val = cy - ty[ky] + cz - tz[kz] + (f - u)
                        low = min(low, val)
        out[(i, j)] = cx - low
    return out


def cograph_blocker(g: Graph, pi, k: int, l: int) -> CographTable:
    """Tables for every cell ``i + j <= k + l``; ``max_drop(k, l)`` answers
    the question with ``k`` contractions and ``l`` deletions."""
    pi = Parameter.parse(pi)
    if k < 0 or l < 0:
        raise PreconditionError("budgets must be non-negative")
    total = k + l
    if g.n == 0:
        zero = {cell: 0 for cell in _cells(total)}
        return CographTable(pi, total, 0, zero, [])
    tree = cotree(g)
    if not tree:
        raise NotInClassError(f"not a cograph: induced P4 {tree.p4}")
    use_alpha = pi is Parameter.ALPHA
    nodes: list[tuple[Cotree, Table]] = []

    def solve(node: Cotree) -> tuple[Table, int, int]:
        if isinstance(node, CotreeLeaf):
            t = _leaf(total)
            nodes.append((node, t))
            return t, 1, 1
        ty, ny, vy = solve(node.left)
        tz, nz, vz = solve(node.right)
        if use_alpha:
            if node.label == "u":
                t, v = _union_alpha(ty, tz, total), vy + vz
            else:
                t, v = _join_alpha(ty, tz, ny, nz, vy, vz, total), max(vy, vz)
        else:
            if node.label == "u":
                t, v = _union_chi(ty, tz, vy, vz, total), max(vy, vz)
            else:
                t, v = _join_chi(ty, tz, ny, nz, vy, vz, total), vy + vz
        nodes.append((node, t))
        return t, ny + nz, v

    root, _, value = solve(tree)
    return CographTable(pi, total, value, root, nodes)


def cograph_decide(g: Graph, pi, kind: str, d: int, k: int) -> SolverAnswer:
    """Single-operation blocker question answered from the DP table."""
    if kind == "contract":
        table = cograph_blocker(g, pi, k, 0)
        drop = table.max_drop(k, 0)
    elif kind == "delete":
        table = cograph_blocker(g, pi, 0, k)
        drop = table.max_drop(0, k)
    else:
        raise ValueError(f"unknown operation kind {kind!r}")
    return SolverAnswer(drop >= d, None, None)


def cograph_min_k(g: Graph, pi, kind: str, d: int) -> Optional[int]:
    """Smallest budget reaching drop ``d`` by scanning budgets upward."""
    limit = g.n if kind == "delete" else max(g.n - 1, 0)
    for k in range(limit + 1):
        if cograph_decide(g, pi, kind, d, k).decision:
            return k
    return None

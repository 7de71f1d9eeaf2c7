"""Canonical forms of small graphs by individualization and refinement.

Two graphs get the same :func:`canonical_form` exactly when they are
isomorphic.  The search refines an ordered vertex partition to an
equitable one, branches on the first non-singleton cell, and keeps the
smallest adjacency code over all leaves.  Swapping two twins is an
automorphism, so only one vertex per twin class is tried at each branch.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["canonical_form", "is_isomorphic"]


def _refine(cells: list[list[int]], masks: list[int]) -> list[list[int]]:
    while True:
        for w in cells:
            wm = 0
            for v in w:
                wm |= 1 << v
            out: list[list[int]] = []
            split = False
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault((masks[v] & wm).bit_count(), []).append(v)
                if len(groups) > 1:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(c)
            if split:
                cells = out
                break
        else:
            return cells


def _code(order: list[int], masks: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        m = masks[v]
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rows.append(row)
    return tuple(rows)


def canonical_form(g: Graph) -> tuple:
    """A hashable isomorphism invariant that is also complete."""
    _, masks = g.index()
    n = len(masks)
    if n == 0:
        return (0,)
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(masks[v].bit_count(), []).append(v)
    cells = _refine([by_degree[k] for k in sorted(by_degree)], masks)
    best: list = [None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _code([c[0] for c in cells], masks)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(v, u, masks) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(cells[:target] + [[v], rest] + cells[target + 1:], masks))

    search(cells)
    return (n,) + best[0]


def _twins(a: int, b: int, masks: list[int]) -> bool:
    strip = ~((1 << a) | (1 << b))
    return masks[a] & strip == masks[b] & strip


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)

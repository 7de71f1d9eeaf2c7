"""Exact graph parameters: alpha, omega, chi, matchings and vertex covers.

Everything here is exponential in the worst case except the matching
routines.  Graphs are translated to neighbourhood bitmasks over vertex
positions (see :meth:`Graph.index`) and all searches run on those masks.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Optional

from .errors import NotInClassError, SizeGuardError
from .graph import Graph, complement, connected_components, induced_subgraph

__all__ = [
    "Parameter", "DEFAULT_LIMIT",
    "alpha", "omega", "chi", "parameter_value",
    "max_clique", "max_independent_set", "optimal_colouring", "is_k_colorable",
    "maximum_matching", "matching_number",
    "bipartition", "is_bipartite", "min_vertex_cover_bipartite",
    "chi_3p1free", "has_independent_triple",
]

DEFAULT_LIMIT = 24


class Parameter(str, Enum):
    ALPHA = "alpha"
    OMEGA = "omega"
    CHI = "chi"

    @classmethod
    def parse(cls, value: "str | Parameter") -> "Parameter":
        if isinstance(value, Parameter):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown parameter {value!r}; expected alpha, omega or chi") from None


def _guard(g: Graph, limit: Optional[int]) -> None:
    if limit is not None and g.n > limit:
        raise SizeGuardError(f"{g.n} vertices exceeds the exact-computation limit {limit}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- cliques ----------------------------------------------------------------

def _clique_search(masks: list[int], cand: int) -> int:
    """Return a maximum clique (as a mask) inside ``cand``.

    Branch and bound with a greedy-colouring bound: vertices are ordered
    by colour class and explored from the highest colour down, pruning as
    soon as the current clique plus the colour number cannot beat the best.
    """
    best = [0, 0]  # size, mask

    def colour_sort(p: int) -> tuple[list[int], list[int]]:
        order, cols = [], []
        uncol = p
        c = 0
        while uncol:
            c += 1
            q = uncol
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low & ~masks[v]
                uncol &= ~low
                order.append(v)
                cols.append(c)
        return order, cols

    def expand(size: int, rmask: int, p: int) -> None:
        order, cols = colour_sort(p)
        for idx in range(len(order) - 1, -1, -1):
            if size + cols[idx] <= best[0]:
                return
            v = order[idx]
            bit = 1 << v
            newp = p & masks[v]
            if newp:
                expand(size + 1, rmask | bit, newp)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, rmask | bit
            p &= ~bit

    if cand:
        expand(0, 0, cand)
    return best[1]


def max_clique(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> frozenset[int]:
    """A maximum clique of ``g`` (empty for the empty graph)."""
    _guard(g, limit)
    best: frozenset[int] = frozenset()
    for comp in connected_components(g):
        if len(comp) <= len(best):
            continue
        h = induced_subgraph(g, comp)
        order, masks = h.index()
        found = _clique_search(masks, (1 << len(order)) - 1)
        if found.bit_count() > len(best):
            best = frozenset(order[i] for i in _bits(found))
    return best


def max_independent_set(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> frozenset[int]:
    """A maximum independent set, assembled component by component."""
    _guard(g, limit)
    out: set[int] = set()
    for comp in connected_components(g):
        h = complement(induced_subgraph(g, comp))
        order, masks = h.index()
        found = _clique_search(masks, (1 << len(order)) - 1)
        out.update(order[i] for i in _bits(found))
    return frozenset(out)


def omega(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> int:
    return len(max_clique(g, limit))


def alpha(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> int:
    return len(max_independent_set(g, limit))


# -- colouring --------------------------------------------------------------

def _colour_with(masks: list[int], q: int) -> Optional[list[int]]:
    """Backtracking DSATUR search for a proper ``q``-colouring."""
    n = len(masks)
    if n == 0:
        return []
    if q <= 0:
        return None
    colour = [-1] * n
    # forbidden[v] is a bitmask of colours used by coloured neighbours
    forbidden = [0] * n
    degree = [m.bit_count() for m in masks]
    full = (1 << q) - 1

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if colour[v] < 0:
                k = (forbidden[v].bit_count(), degree[v])
                if k > key:
                    best, key = v, k
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        allowed = min(q, used + 1)
        for c in range(allowed):
            if forbidden[v] >> c & 1:
                continue
            colour[v] = c
            touched = []
            ok = True
            for w in _bits(masks[v]):
                if colour[w] < 0 and not forbidden[w] >> c & 1:
                    forbidden[w] |= 1 << c
                    touched.append(w)
                    if forbidden[w] & full == full:
                        ok = False
            if ok and rec(done + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colour[v] = -1
        return False

    return colour if rec(0, 0) else None


def _greedy_dsatur(masks: list[int]) -> list[int]:
    n = len(masks)
    colour = [-1] * n
    forbidden = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (forbidden[u].bit_count(), masks[u].bit_count(), -u))
        c = 0
        while forbidden[v] >> c & 1:
            c += 1
        colour[v] = c
        for w in _bits(masks[v]):
            forbidden[w] |= 1 << c
    return colour


def _optimal_component_colouring(h: Graph) -> list[int]:
    order, masks = h.index()
    upper = _greedy_dsatur(masks)
    ub = max(upper) + 1 if upper else 0
    lb = _clique_search(masks, (1 << len(order)) - 1).bit_count()
    for q in range(lb, ub):
        found = _colour_with(masks, q)
        if found is not None:
            return found
    return upper


def optimal_colouring(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> dict[int, int]:
    """A colouring with exactly ``chi(g)`` colours, as ``vertex -> colour``."""
    _guard(g, limit)
    out: dict[int, int] = {}
    for comp in connected_components(g):
        h = induced_subgraph(g, comp)
        cols = _optimal_component_colouring(h)
        out.update(zip(h.index()[0], cols))
    return out


def chi(g: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> int:
    cols = optimal_colouring(g, limit)
    return max(cols.values()) + 1 if cols else 0


def is_k_colorable(g: Graph, q: int, limit: Optional[int] = DEFAULT_LIMIT) -> bool:
    if q < 0:
        raise ValueError("number of colours must be non-negative")
    _guard(g, limit)
    for comp in connected_components(g):
        h = induced_subgraph(g, comp)
        if _colour_with(h.index()[1], q) is None:
            return False
    return True


def parameter_value(g: Graph, pi: "Parameter | str", limit: Optional[int] = DEFAULT_LIMIT) -> int:
    pi = Parameter.parse(pi)
    if pi is Parameter.ALPHA:
        return alpha(g, limit)
    if pi is Parameter.OMEGA:
        return omega(g, limit)
    return chi(g, limit)


# -- matchings --------------------------------------------------------------

def maximum_matching(g: Graph) -> frozenset[tuple[int, int]]:
    """Maximum-cardinality matching of a general graph (Edmonds' blossoms).

    Edges are returned as sorted pairs.
    """
    order = g.vertices
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    adj = [[pos[w] for w in sorted(g.neighbors(v))] for v in order]
    match = [-1] * n

    # greedy start
    for v in range(n):
        if match[v] < 0:
            for w in adj[v]:
                if match[w] < 0:
                    match[v], match[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        # augment along the alternating path ending at ``to``
                        while to >= 0:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] < 0:
            augment_from(v)
    return frozenset((min(order[v], order[match[v]]), max(order[v], order[match[v]]))
                     for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


# -- bipartite graphs -------------------------------------------------------

def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two colour classes of a proper 2-colouring, or None.

    Each component's smallest vertex goes to the first class.
    """
    side: dict[int, int] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return (frozenset(v for v, s in side.items() if s == 0),
            frozenset(v for v, s in side.items() if s == 1))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def min_vertex_cover_bipartite(g: Graph) -> frozenset[int]:
    """Minimum vertex cover of a bipartite graph via König's construction."""
    parts = bipartition(g)
    if parts is None:
        raise NotInClassError("graph is not bipartite")
    left, right = parts
    mate: dict[int, int] = {}
    for u, v in maximum_matching(g):
        mate[u], mate[v] = v, u
    # alternating search from unmatched left vertices
    reached = set(v for v in left if v not in mate)
    queue = deque(reached)
    while queue:
        x = queue.popleft()
        if x in left:
            for y in g.neighbors(x):
                if mate.get(x) != y and y not in reached:
                    reached.add(y)
                    queue.append(y)
        else:
            y = mate.get(x)
            if y is not None and y not in reached:
                reached.add(y)
                queue.append(y)
    return frozenset((left - reached) | (right & reached))


# -- graphs with independence number at most two -----------------------------

def has_independent_triple(g: Graph) -> bool:
    order, masks = g.index()
    full = (1 << len(order)) - 1
    for i in range(len(order)):
        non = full & ~masks[i] & ~((1 << (i + 1)) - 1)
        for j in _bits(non):
            if non & ~masks[j] & ~((1 << (j + 1)) - 1):
                return True
    return False


def chi_3p1free(g: Graph) -> tuple[int, int]:
    """``(chi, l)`` for a graph with no independent set of size 3.

    Colour classes have size one or two, so an optimal colouring is a
    maximum matching of the complement; ``l`` counts the singleton classes,
    which is the same for every optimal colouring.
    """
    if has_independent_triple(g):
        raise NotInClassError("graph contains three pairwise non-adjacent vertices")
    mu = matching_number(complement(g))
    return g.n - mu, g.n - 2 * mu

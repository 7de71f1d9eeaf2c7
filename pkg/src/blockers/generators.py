"""Seeded random graphs from the classes the solvers handle."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Union

from .graph import Graph, complement
from .recognize import IntervalModel, interval_graph, is_c4_free

__all__ = [
    "make_rng", "random_graph", "random_tree", "random_cograph", "random_split",
    "random_interval_model", "random_interval", "random_bipartite",
    "random_cobipartite", "random_triangle_free", "random_3p1free",
    "random_p1p3free", "random_c4free",
]

Seed = Union[int, random.Random, None]


def make_rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed: Seed = None) -> Graph:
    rng = make_rng(seed)
    return Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, seed: Seed = None) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    rng = make_rng(seed)
    if n <= 0:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph([0])
    if n == 2:
        return Graph(range(2), [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph(range(n), edges)


def random_cograph(n: int, seed: Seed = None) -> Graph:
    """Evaluate a random binary cotree whose leaves are ``0..n-1``."""
    rng = make_rng(seed)
    edges: list[tuple[int, int]] = []

    def build(vs: list[int]) -> None:
        if len(vs) == 1:
            return
        cut = rng.randint(1, len(vs) - 1)
        left, right = vs[:cut], vs[cut:]
        build(left)
        build(right)
        if rng.random() < 0.5:
            edges.extend((a, b) for a in left for b in right)

    vs = list(range(n))
    rng.shuffle(vs)
    if n:
        build(vs)
    return Graph(range(n), edges)


def random_split(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    rng = make_rng(seed)
    size = rng.randint(0, n)
    vs = list(range(n))
    rng.shuffle(vs)
    K, I = vs[:size], vs[size:]
    edges = list(combinations(K, 2))
    edges += [(a, b) for a in K for b in I if rng.random() < p]
    return Graph(range(n), edges)


def random_interval_model(n: int, seed: Seed = None, span: int = None,
                          max_len: int = None) -> IntervalModel:
    rng = make_rng(seed)
    span = span if span is not None else 2 * n
    max_len = max_len if max_len is not None else max(2, span // 3)
    data = {}
    for v in range(n):
        l = rng.randint(0, span)
        data[v] = (l, l + rng.randint(0, max_len))
    return IntervalModel(data)


def random_interval(n: int, seed: Seed = None) -> tuple[Graph, IntervalModel]:
    model = random_interval_model(n, seed)
    return interval_graph(model), model


def random_bipartite(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    rng = make_rng(seed)
    side = [rng.random() < 0.5 for _ in range(n)]
    return Graph(range(n), [(a, b) for a, b in combinations(range(n), 2)
                            if side[a] != side[b] and rng.random() < p])


def random_cobipartite(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    return complement(random_bipartite(n, seed, p))


def random_triangle_free(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    """Random edges in random order, skipping any that would close a triangle."""
    rng = make_rng(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in pairs:
        if rng.random() < p and not (adj[a] & adj[b]):
            adj[a].add(b)
            adj[b].add(a)
    return Graph(range(n), [(a, b) for a in adj for b in adj[a] if a < b])


def random_3p1free(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    """Complement of a random triangle-free graph."""
    return complement(random_triangle_free(n, seed, p))


def random_p1p3free(n: int, seed: Seed = None) -> Graph:
    """Complement of a random paw-free graph, built as a disjoint union of
    triangle-free pieces and complete multipartite pieces."""
    rng = make_rng(seed)
    vs = list(range(n))
    rng.shuffle(vs)
    edges: list[tuple[int, int]] = []
    while vs:
        size = rng.randint(1, len(vs))
        part, vs = vs[:size], vs[size:]
        if rng.random() < 0.5:
            piece = random_triangle_free(size, rng, rng.random())
            edges += [(part[a], part[b]) for a, b in piece.edges()]
        else:
            colour = [rng.randrange(max(1, size // 2 + 1)) for _ in part]
            edges += [(part[a], part[b]) for a, b in combinations(range(size), 2)
                      if colour[a] != colour[b]]
    return complement(Graph(range(n), edges))


def random_c4free(n: int, seed: Seed = None, p: float = 0.5) -> Graph:
    """Random edges in random order, keeping each only if no induced C4 appears."""
    rng = make_rng(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    for e in pairs:
        if rng.random() < p and is_c4_free(Graph(range(n), edges + [e])):
            edges.append(e)
    return Graph(range(n), edges)

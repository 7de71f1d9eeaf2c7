"""Hypothesis strategies and small helpers shared by the tests."""

from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from blockers.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7, ids: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if ids:
        vertices = draw(st.lists(st.integers(0, 40), min_size=n, max_size=n, unique=True))
    else:
        vertices = list(range(n))
    pairs = [(vertices[i], vertices[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(vertices, [p for p, keep in zip(pairs, mask) if keep])


seeds = st.integers(0, 2**31 - 1)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h

"""Maximal cliques of a C4-free graph under one edge contraction."""

from __future__ import annotations

from hypothesis import given, strategies as st

from blockers.generators import random_c4free
from blockers.graph import Graph, contract_edge
from blockers.recognize import maximal_cliques
from strategies import seeds
from test_acceptance import clique_correspondence_errors


def test_triangle_through_the_edge_can_disappear():
    # triangle 1-2-4 plus vertex 0 adjacent to 1 and 4; contracting 1 into 2
    # turns {0, 1, 4} into {0, 2, 4}, which swallows the image {2, 4} of {1, 2, 4}
    g = Graph([0, 1, 2, 4], [(1, 2), (1, 4), (2, 4), (0, 1), (0, 4)])
    h = contract_edge(g, 1, 2)
    assert frozenset({1, 2, 4}) in maximal_cliques(g)
    assert maximal_cliques(h) == [frozenset({0, 2, 4})]
    assert clique_correspondence_errors(g, 1, 2) == []


@given(seeds, st.integers(2, 9), st.data())
def test_forward_correspondence(seed, n, data):
    g = random_c4free(n, seed)
    if not g.m:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    assert clique_correspondence_errors(g, u, v) == []
    assert clique_correspondence_errors(g, v, u) == []

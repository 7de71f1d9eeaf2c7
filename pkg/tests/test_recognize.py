from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from blockers.errors import PreconditionError
from blockers.generators import (random_cograph, random_interval, random_p1p3free,
                                 random_split)
from blockers.graph import Graph, complement, complete_graph, cycle_graph, path_graph, star_graph
from blockers.params import alpha, omega
from blockers.recognize import (IntervalModel, classify, clique_path, cotree, find_induced,
                                find_interval_model, interval_graph, is_3p1_free, is_c4_free,
                                is_chordal, is_cobipartite, is_cograph, is_induced_subgraph,
                                is_p1p3_free, is_perfect_small, is_split, is_tree,
                                maximal_cliques, named_graph, parse_cotree, split_partition,
                                validate_interval_model)
from strategies import graphs, seeds, to_nx


def has_induced_p4(g: Graph) -> bool:
    p4 = nx.path_graph(4)
    h = to_nx(g)
    return any(nx.is_isomorphic(h.subgraph(s), p4) for s in combinations(g.vertices, 4))


@given(graphs(min_n=1, max_n=8))
def test_cotree_or_p4_certificate(g):
    t = cotree(g)
    assert bool(t) == (not has_induced_p4(g))
    if t:
        assert t.evaluate() == g
        assert parse_cotree(t.dump()) == t
    else:
        a, b, c, d = t.p4
        assert [g.has_edge(x, y) for x, y in combinations((a, b, c, d), 2)] == \
            [True, False, False, True, False, True]


def test_cotree_of_empty_graph_is_refused():
    with pytest.raises(PreconditionError):
        cotree(Graph())
    assert is_cograph(Graph())


def test_cotree_dump_is_binary():
    assert cotree(complete_graph(3)).dump() == "(j (j 0 1) 2)"
    with pytest.raises(ValueError):
        parse_cotree("(j 0 1 2)")


@given(seeds)
def test_random_cographs_are_cographs(seed):
    assert is_cograph(random_cograph(9, seed))


@given(graphs(max_n=8))
def test_split_recognition(g):
    part = split_partition(g)
    expected = nx.is_chordal(to_nx(g)) and nx.is_chordal(to_nx(complement(g))) if g.n else True
    assert (part is not None) == expected
    if part is None:
        return
    assert all(g.has_edge(u, v) for u, v in combinations(part.K, 2))
    assert not any(g.has_edge(u, v) for u, v in combinations(part.I, 2))
    low = split_partition(g, "minimal")
    assert len(low.I) == alpha(g)
    high = split_partition(g, "maximal")
    assert len(high.K) == omega(g)


@given(seeds)
def test_random_split_graphs(seed):
    assert is_split(random_split(8, seed))
    assert not is_split(cycle_graph(4))


@given(seeds)
def test_interval_model_and_clique_path(seed):
    g, model = random_interval(9, seed)
    assert validate_interval_model(g, model)
    path = clique_path(model)
    assert sorted(path, key=sorted) == sorted(maximal_cliques(g), key=sorted)
    for v in g.vertices:
        hits = [i for i, c in enumerate(path) if v in c]
        assert hits == list(range(hits[0], hits[-1] + 1))


def test_interval_model_text_roundtrip():
    model = IntervalModel({0: (0, 2), 1: (2, 5), 2: (6, 6)})
    assert IntervalModel.parse(model.format()) == model
    assert interval_graph(model).edges() == [(0, 1)]
    with pytest.raises(PreconditionError):
        IntervalModel({0: (3, 1)})
    with pytest.raises(PreconditionError):
        validate_interval_model(path_graph(2), model)


def test_find_interval_model():
    assert find_interval_model(cycle_graph(4)) is None
    model = find_interval_model(path_graph(5))
    assert validate_interval_model(path_graph(5), model)


@given(graphs(max_n=8))
def test_maximal_cliques_match_networkx(g):
    ours = sorted(sorted(c) for c in maximal_cliques(g))
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert ours == theirs


@given(graphs(max_n=8))
def test_chordal_matches_networkx(g):
    assert is_chordal(g) == (nx.is_chordal(to_nx(g)) if g.n else True)


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=4))
def test_find_induced_returns_an_embedding(g, h):
    emb = find_induced(g, h)
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    assert (emb is not None) == matcher.subgraph_is_isomorphic()
    if emb is not None:
        for a, b in combinations(h.vertices, 2):
            assert h.has_edge(a, b) == g.has_edge(emb[a], emb[b])


def test_class_membership_examples():
    assert is_tree(star_graph(4)) and not is_tree(cycle_graph(4))
    assert is_cobipartite(complement(cycle_graph(6)))
    assert is_3p1_free(complete_graph(4)) and not is_3p1_free(star_graph(3))
    assert not is_p1p3_free(named_graph("P1+P3"))
    assert is_c4_free(cycle_graph(5)) and not is_c4_free(cycle_graph(4))
    assert not is_perfect_small(cycle_graph(5))
    assert not is_perfect_small(complement(cycle_graph(7)))
    assert is_perfect_small(cycle_graph(6))


@given(seeds)
def test_random_p1p3free(seed):
    assert is_p1p3_free(random_p1p3free(8, seed))


def test_named_graphs():
    assert named_graph("paw").m == 4
    assert named_graph("K1,3").m == 3
    assert named_graph("3P1").m == 0 and named_graph("3P1").n == 3
    assert named_graph("C3+P1").n == 4 and named_graph("C3+P1").m == 3
    assert is_induced_subgraph(named_graph("3P1"), named_graph("P1+P3"))
    with pytest.raises(ValueError):
        named_graph("Petersen")


def test_classify_examples():
    assert classify(named_graph("P4"), "alpha", "delete").verdict == "polynomial"
    assert classify(named_graph("paw"), "omega", "contract").verdict == "polynomial"
    assert classify(named_graph("paw"), "chi", "contract").verdict == "hard"
    assert classify(named_graph("C3+P1"), "omega", "contract").verdict == "open"
    assert classify(named_graph("3P1"), "chi", "delete").verdict == "polynomial"
    with pytest.raises(ValueError):
        classify(named_graph("P4"), "alpha", "shrink")

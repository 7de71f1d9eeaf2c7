from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from blockers.canonical import is_isomorphic
from blockers.errors import NotInClassError, PreconditionError
from blockers.generators import random_cobipartite
from blockers.graph import Graph, complete_graph, cycle_graph, path_graph
from blockers.oracle import oracle_decide, verify_witness
from blockers.params import is_bipartite, omega
from blockers.recognize import is_c4_free, is_chordal, is_split
from blockers.reductions import (CnfFormula, RbdsInstance, clique_proof_lift, girth,
                                 girth_lift, has_forced_vertex, lift_to_c4free_perfect,
                                 one_in_three_brute_force, one_in_three_witness,
                                 reduce_1in3sat_to_omega, reduce_biclique_to_cobipartite_chi,
                                 reduce_cobipartite_alpha_to_bipartite, reduce_forced_vertex,
                                 reduce_rbds_to_split_alpha, reduce_rbds_to_split_chi,
                                 reduce_vc_to_chordal, vertex_cover_brute_force)
from strategies import graphs, seeds


def test_dimacs_roundtrip():
    f = CnfFormula(3, ((1, 2, -3), (-1, 2, 3)))
    assert CnfFormula.parse_dimacs(f.to_dimacs()) == f
    with pytest.raises(PreconditionError):
        CnfFormula.parse_dimacs("p cnf 2 1\n1 2 0\n")
    with pytest.raises(PreconditionError):
        CnfFormula(2, ((1, 2, 3),))


def test_one_in_three_gadget_size():
    # five vertices per variable, three per clause; k = n + m
    f = CnfFormula(4, ((1, 2, 3), (-2, 3, 4), (1, -3, -4)))
    inst = reduce_1in3sat_to_omega(f)
    assert inst.graph.n == 5 * 4 + 3 * 3
    assert inst.k == 4 + 3 and inst.d == 1
    assert omega(inst.graph, limit=None) == 3


def test_one_in_three_rejects_repeated_variables():
    with pytest.raises(PreconditionError):
        reduce_1in3sat_to_omega(CnfFormula(2, ((1, 1, 2),)))


@given(st.data())
@settings(max_examples=25)
def test_one_in_three_witness_from_assignment(data):
    n = data.draw(st.integers(3, 5))
    clauses = []
    for _ in range(data.draw(st.integers(1, 3))):
        vs = data.draw(st.permutations(range(1, n + 1)))[:3]
        clauses.append(tuple(v * data.draw(st.sampled_from((1, -1))) for v in vs))
    f = CnfFormula(n, tuple(clauses))
    inst = reduce_1in3sat_to_omega(f)
    assignment = one_in_three_brute_force(f)
    if assignment is not None:
        w = one_in_three_witness(f, assignment)
        assert len(w) == inst.k and verify_witness(inst, w)


def test_unsatisfiable_three_clause_formula():
    # x1 must be true in the first clause and false in the second
    f = CnfFormula(3, ((1, 2, 3), (1, -2, 3), (1, 2, -3)))
    assert one_in_three_brute_force(f) is None


def test_rbds_normalization():
    raw = RbdsInstance({0, 1}, {2}, {(0, 2)}, 2)
    with pytest.raises(PreconditionError):
        raw.check_normalized()
    norm = raw.normalized()
    assert norm.B == {0} and norm.k == 1
    norm.check_normalized()
    assert RbdsInstance.parse(norm.format()) == norm


def test_rbds_reductions_emit_split_graphs():
    src = RbdsInstance({0, 1, 2}, {3, 4}, {(0, 3), (1, 3), (2, 4)}, 1)
    a = reduce_rbds_to_split_alpha(src)
    c = reduce_rbds_to_split_chi(src)
    assert is_split(a.graph) and is_split(c.graph)
    assert (a.d, a.k) == (2, 2) and (c.d, c.k) == (2, 2)
    assert not oracle_decide(a).feasible and not oracle_decide(c).feasible
    yes = RbdsInstance(src.B, src.R, src.edges, 2)
    assert oracle_decide(reduce_rbds_to_split_alpha(yes)).feasible
    assert oracle_decide(reduce_rbds_to_split_chi(yes), size_guard=None).feasible


def test_c4free_lift_of_triangle():
    inst = lift_to_c4free_perfect(complete_graph(3), 0)
    g = inst.graph
    assert g.n == 12 and is_c4_free(g) and omega(g) == 3
    assert inst.k == 3


@given(graphs(min_n=2, max_n=5), st.integers(0, 3))
def test_vc_gadget(g, k):
    if g.m == 0:
        with pytest.raises(PreconditionError):
            reduce_vc_to_chordal(g, k)
        return
    inst = reduce_vc_to_chordal(g, k)
    assert is_chordal(inst.graph)
    assert omega(inst.graph, limit=None) == g.n + 3


def test_vc_gadget_equivalence_small():
    g = path_graph(3)
    for k in range(3):
        inst = reduce_vc_to_chordal(g, k)
        assert oracle_decide(inst, size_guard=None).feasible == vertex_cover_brute_force(g, k)


@given(seeds, st.integers(3, 6))
def test_cobipartite_to_bipartite_structure(seed, n):
    g = random_cobipartite(n, seed)
    if g.m == 0 or g.m == n * (n - 1) // 2:
        return
    inst = reduce_cobipartite_alpha_to_bipartite(g, 1)
    assert is_bipartite(inst.graph)
    plus_m = g.m + 3 + 3 * n
    assert inst.graph.n == n + 3 + plus_m
    assert inst.k == 1 + plus_m


def test_cobipartite_reduction_preconditions():
    with pytest.raises(NotInClassError):
        reduce_cobipartite_alpha_to_bipartite(cycle_graph(5), 1)
    with pytest.raises(PreconditionError):
        reduce_cobipartite_alpha_to_bipartite(complete_graph(3), 1)


def test_biclique_reduction_preconditions():
    with pytest.raises(PreconditionError):
        reduce_biclique_to_cobipartite_chi(path_graph(4))
    with pytest.raises(NotInClassError):
        reduce_biclique_to_cobipartite_chi(cycle_graph(7))


def test_girth():
    assert girth(path_graph(4)) is None
    assert girth(cycle_graph(5)) == 5
    assert girth(complete_graph(4)) == 3


def test_girth_lift_small_cases():
    assert is_isomorphic(girth_lift(path_graph(2), 5), path_graph(4))
    lifted = girth_lift(complete_graph(3), 5)
    assert girth(lifted) == 9


@given(graphs(min_n=1, max_n=4), st.integers(3, 5))
@settings(max_examples=30)
def test_girth_lift_keeps_forced_vertices(g, p):
    h = girth_lift(g, p)
    assert girth(h) is None or girth(h) > p
    assert has_forced_vertex(g) == has_forced_vertex(h)
    if h.n <= 14:
        assert oracle_decide(reduce_forced_vertex(g, p)).feasible == has_forced_vertex(g)


def test_forced_vertex_examples():
    assert has_forced_vertex(path_graph(3))      # both leaves are in every maximum set
    assert not has_forced_vertex(cycle_graph(4))
    assert not has_forced_vertex(Graph())


@given(graphs(min_n=1, max_n=4), st.integers(1, 3))
@settings(max_examples=30)
def test_clique_proof_lift(g, l):
    inst = clique_proof_lift(g, l)
    assert inst.graph.n == 2 * g.n + l + 1
    assert oracle_decide(inst, size_guard=None).feasible == (omega(g) <= l)

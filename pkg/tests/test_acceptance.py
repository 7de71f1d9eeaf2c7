"""The eleven acceptance criteria, each checked at its stated size and time bound.

Run with ``pytest tests/test_acceptance.py -v``; a one-line verdict per
criterion is printed in the terminal summary.  Running this file as a
script prints the same lines.
"""

from __future__ import annotations

import time
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

from acceptance_log import record
from blockers import cli
from blockers.generators import (make_rng, random_3p1free, random_bipartite, random_c4free,
                                 random_cograph, random_graph, random_interval,
                                 random_p1p3free, random_split)
from blockers.graph import (Graph, apply_witness, connected_components, contract_edge,
                            induced_subgraph, parse_witness)
from blockers.oracle import BlockerInstance, oracle_decide, oracle_drop_table, oracle_min_k
from blockers.params import alpha, matching_number, min_vertex_cover_bipartite, omega
from blockers.recognize import (classify, is_c4_free, is_chordal, is_perfect_small,
                                is_split, maximal_cliques, named_graph)
from blockers.reductions import (CnfFormula, RbdsInstance, biclique_partition3_brute_force,
                                 clique_proof_lift, lift_to_c4free_perfect,
                                 one_in_three_brute_force, rbds_brute_force,
                                 reduce_1in3sat_to_omega, reduce_biclique_to_cobipartite_chi,
                                 reduce_rbds_to_split_alpha, reduce_rbds_to_split_chi,
                                 reduce_vc_to_chordal, vertex_cover_brute_force)
from blockers.solvers import (bipartite_deletion_blocker, cograph_blocker,
                              contraction_blocker_chi_3p1free, deletion_blocker_chi_3p1free,
                              deletion_blocker_chi_p1p3free, interval_contraction_blocker,
                              interval_deletion_blocker, split_contraction_blocker,
                              tree_contraction_blocker_alpha)

DATA = Path(__file__).parent / "data"
PARAMS = ("alpha", "omega", "chi")


class Clock:
    def __init__(self, limit: float):
        self.limit = limit
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def ok(self) -> bool:
        return self.elapsed < self.limit


def finish(number: int, failures: list, count: int, clock: Clock, what: str) -> None:
    ok = not failures and clock.ok()
    detail = f"{count} {what}, {len(failures)} mismatches, {clock.elapsed:.1f}s (limit {clock.limit:.0f}s)"
    record(number, ok, detail)
    assert not failures, failures[:5]
    assert clock.ok(), f"took {clock.elapsed:.1f}s"


def test_criterion_01_trees():
    clock, failures, count = Clock(300), [], 0
    trees = [Graph([0], [])] + [Graph(t.nodes, t.edges)
                                for n in range(2, 10) for t in nx.nonisomorphic_trees(n)]
    for t in trees:
        for d in range(alpha(t) + 1):
            ans = tree_contraction_blocker_alpha(t, d)
            res = oracle_min_k(t, "alpha", "contract", d)
            count += 1
            got = ans.min_k if ans.decision else None
            want = res.min_k if res.feasible else None
            if got != want:
                failures.append((t.edges(), d, got, want))
    finish(1, failures, count, clock, "tree/d pairs")


def test_criterion_02_cograph_dp():
    clock, failures = Clock(600), []
    rng = make_rng(2)
    for _ in range(200):
        g = random_cograph(rng.randint(1, 8), rng)
        for pi in PARAMS:
            table = cograph_blocker(g, pi, 3, 0)
            truth = oracle_drop_table(g, pi, 3)
            for (i, j), drop in truth.items():
                if table.max_drop(i, j) != drop:
                    failures.append((g.edges(), g.n, pi, i, j, table.max_drop(i, j), drop))
    finish(2, failures, 200, clock, "cographs x 3 parameters x 10 cells")


def test_criterion_03_interval_greedy():
    clock, failures, count = Clock(600), [], 0
    rng = make_rng(3)
    for _ in range(200):
        g, model = random_interval(rng.randint(1, 8), rng)
        for d in range(1, omega(g) + 1):
            for kind, solver in (("contract", interval_contraction_blocker),
                                 ("delete", interval_deletion_blocker)):
                ans = solver(model, "omega", d, graph=g)
                res = oracle_min_k(g, "omega", kind, d)
                count += 1
                got = ans.min_k if ans.decision else None
                want = res.min_k if res.feasible else None
                if got != want:
                    failures.append((kind, model.format(), d, got, want))
    finish(3, failures, count, clock, "model/d/variant triples")


def test_criterion_04_split():
    clock, failures, count = Clock(600), [], 0
    rng = make_rng(4)
    for _ in range(200):
        g = random_split(rng.randint(1, 8), rng)
        for pi in PARAMS:
            for d in range(3):
                for k in range(5):
                    inst = BlockerInstance(g, pi, "contract", d, k)
                    got = split_contraction_blocker(g, pi, d, k).decision
                    count += 1
                    if got != oracle_decide(inst).feasible:
                        failures.append((g.edges(), g.n, pi, d, k, got))
    finish(4, failures, count, clock, "split instances")


def test_criterion_05_colouring_classes():
    clock, failures, count = Clock(600), [], 0
    rng = make_rng(5)
    for _ in range(100):
        g = random_3p1free(rng.randint(1, 8), rng)
        for d in range(3):
            for k in range(5):
                for kind, solver in (("contract", contraction_blocker_chi_3p1free),
                                     ("delete", deletion_blocker_chi_3p1free)):
                    inst = BlockerInstance(g, "chi", kind, d, k)
                    count += 1
                    if solver(g, d, k).decision != oracle_decide(inst).feasible:
                        failures.append(("3P1-free", kind, g.edges(), g.n, d, k))
        h = random_p1p3free(rng.randint(1, 8), rng)
        for d in range(3):
            for k in range(5):
                inst = BlockerInstance(h, "chi", "delete", d, k)
                count += 1
                if deletion_blocker_chi_p1p3free(h, d, k).decision != oracle_decide(inst).feasible:
                    failures.append(("P1+P3-free", h.edges(), h.n, d, k))
    finish(5, failures, count, clock, "instances over 100+100 graphs")


def test_criterion_06_figure_gadget(capsys):
    clock = Clock(1)
    formula = CnfFormula.parse_dimacs((DATA / "fig1.cnf").read_text())
    inst = reduce_1in3sat_to_omega(formula)
    g = inst.graph
    triangles = [t for t in combinations(g.vertices, 3)
                 if all(g.has_edge(a, b) for a, b in combinations(t, 2))]
    disjoint = all(not set(a) & set(b) for a, b in combinations(triangles, 2))
    witness = parse_witness((DATA / "fig2_witness.txt").read_text())
    final = omega(apply_witness(g, witness))
    inst_path = DATA.parent / ".fig1_instance.json"
    inst_path.write_text(inst.to_json())
    try:
        code = cli.main(["verify", str(inst_path), str(DATA / "fig2_witness.txt")])
    finally:
        inst_path.unlink()
    capsys.readouterr()
    checks = [g.n == 21, g.m == 36, omega(g) == 3, len(triangles) == 5, disjoint,
              inst.k == 5, len(witness) == 5, code == 0, final == 2]
    ok = all(checks) and clock.ok()
    record(6, ok, f"n={g.n} m={g.m} omega={omega(g)} triangles={len(triangles)} k={inst.k}, "
                  f"verify exit {code}, final omega {final}, {clock.elapsed:.2f}s")
    assert all(checks), checks
    assert clock.ok()


def _random_rbds(rng) -> RbdsInstance:
    nb, nr = rng.randint(1, 3), rng.randint(1, 3)
    blue, red = list(range(nb)), list(range(nb, nb + nr))
    edges = set()
    for r in red:
        edges.add((rng.choice(blue), r))
        for b in blue:
            if rng.random() < 0.4:
                edges.add((b, r))
    return RbdsInstance(frozenset(blue), frozenset(red), frozenset(edges),
                        rng.randint(0, nb)).normalized()


def _single_clause(rng) -> CnfFormula:
    lits = [v * rng.choice((1, -1)) for v in rng.sample([1, 2, 3], 3)]
    return CnfFormula(3, (tuple(lits),))


def test_criterion_07_reductions():
    clock, failures, count = Clock(1800), [], 0
    rng = make_rng(7)

    def check(name, source_answer, inst):
        nonlocal count
        count += 1
        got = oracle_decide(inst, size_guard=None).feasible
        if got != source_answer:
            failures.append((name, inst.to_dict()))

    for reduce in (reduce_rbds_to_split_alpha, reduce_rbds_to_split_chi):
        for _ in range(25):
            src = _random_rbds(rng)
            inst = reduce(src)
            assert is_split(inst.graph)
            check(reduce.__name__, rbds_brute_force(src), inst)
    for _ in range(25):
        f = _single_clause(rng)
        check("1in3sat", one_in_three_brute_force(f) is not None, reduce_1in3sat_to_omega(f))
    done = 0
    while done < 25:
        g = random_graph(rng.randint(2, 4), 0.6, rng)
        if g.m == 0:
            continue
        k = rng.randint(0, 2)
        check("vc", vertex_cover_brute_force(g, k), reduce_vc_to_chordal(g, k))
        done += 1
    for _ in range(25):
        g = random_graph(rng.randint(1, 4), rng.random(), rng)
        l = rng.randint(1, 3)
        check("cliqueproof", omega(g) <= l, clique_proof_lift(g, l))
    done = 0
    while done < 25:
        g = random_bipartite(rng.randint(6, 8), rng, 0.6)
        if len(connected_components(g)) != 1:
            continue
        check("biclique", biclique_partition3_brute_force(g), reduce_biclique_to_cobipartite_chi(g))
        done += 1
    finish(7, failures, count, clock, "source instances")


def _random_formula(rng) -> CnfFormula:
    n = rng.randint(3, 5)
    clauses = []
    for _ in range(rng.randint(1, 3)):
        clauses.append(tuple(v * rng.choice((1, -1)) for v in rng.sample(range(1, n + 1), 3)))
    return CnfFormula(n, tuple(clauses))


def _connected_sample(g: Graph, size: int, rng) -> Graph:
    start = rng.choice(g.vertices)
    chosen, frontier = {start}, set(g.neighbors(start))
    while len(chosen) < size and frontier:
        v = rng.choice(sorted(frontier))
        chosen.add(v)
        frontier |= set(g.neighbors(v))
        frontier -= chosen
    return induced_subgraph(g, chosen)


def test_criterion_08_gadget_structure():
    clock, failures = Clock(600), []
    rng = make_rng(8)
    formulas = [_random_formula(rng) for _ in range(10)]
    for f in formulas:
        base = reduce_1in3sat_to_omega(f)
        lifted = lift_to_c4free_perfect(base.graph, base.k).graph
        if not is_c4_free(lifted) or omega(lifted, limit=None) != 3:
            failures.append(("lift", f))
            continue
        for _ in range(50):
            sub = _connected_sample(lifted, rng.randint(5, 12), rng)
            if not is_perfect_small(sub):
                failures.append(("perfect", f, sub.edges()))
                break
    for _ in range(25):
        g = random_graph(rng.randint(2, 6), 0.5, rng)
        if g.m == 0:
            continue
        out = reduce_vc_to_chordal(g, 1).graph
        if not is_chordal(out) or omega(out, limit=None) != g.n + 3:
            failures.append(("chordal", g.edges(), g.n))
    finish(8, failures, len(formulas), clock, "lifted formulas (+ chordal gadgets)")


def test_criterion_09_konig():
    clock, failures = Clock(600), []
    rng = make_rng(9)
    for _ in range(500):
        g = random_bipartite(rng.randint(1, 12), rng, rng.random())
        if alpha(g) + matching_number(g) != g.n:
            failures.append(("alpha+mu", g.edges(), g.n))
        cover = len(min_vertex_cover_bipartite(g))
        if cover != matching_number(g):
            failures.append(("cover", g.edges(), g.n))
        d = omega(g) - 1
        for k in range(g.n + 1):
            if bipartite_deletion_blocker(g, "omega", d, k).decision != vertex_cover_brute_force(g, k):
                failures.append(("blocker", g.edges(), g.n, k))
    finish(9, failures, 500, clock, "bipartite graphs")


def clique_correspondence_errors(g: Graph, u: int, v: int) -> list[str]:
    """Compare the maximal cliques before and after contracting ``uv``
    (the merged vertex keeps the id ``v``)."""
    h = contract_edge(g, u, v)
    before, after = set(maximal_cliques(g)), set(maximal_cliques(h))
    errors = []
    if {c for c in before if u not in c and v not in c} != {c for c in after if v not in c}:
        errors.append("cliques avoiding the edge changed")
    for k in (c for c in after if v in c):
        rest = k - {v}
        cases = [rest | {u} in before,
                 rest | {v} in before,
                 rest | {u, v} in before]
        if sum(cases) != 1:
            errors.append(f"clique {sorted(k)} matches cases {cases}")
    if omega(h, limit=None) > omega(g, limit=None):
        errors.append("omega increased")
    return errors


def test_criterion_10_c4free_contraction():
    clock, failures = Clock(600), []
    rng = make_rng(10)
    pairs = 0
    while pairs < 500:
        g = random_c4free(rng.randint(2, 10), rng, rng.uniform(0.2, 0.8))
        edges = g.edges()
        if not edges:
            continue
        assert is_c4_free(g)
        u, v = rng.choice(edges)
        if rng.random() < 0.5:
            u, v = v, u
        errors = clique_correspondence_errors(g, u, v)
        if errors:
            failures.append((g.edges(), u, v, errors))
        pairs += 1
    finish(10, failures, pairs, clock, "(graph, edge) pairs")


PROBES = ["P1", "P2", "P3", "P4", "P5", "3P1", "2P2", "P1+P3", "paw", "C3", "C4", "C5",
          "K1,3", "C3+P1"]
_P4 = {"P1", "P2", "P3", "P4"}
_PAW = {"P1", "P2", "P3", "C3", "paw"}
_P1P3 = {"P1", "P2", "P3", "3P1", "P1+P3"}


def _expected(probe: str, pi: str, kind: str) -> str:
    if pi == "omega" and kind == "contract":
        if probe == "C3+P1":
            return "open"
        return "polynomial" if probe in _P4 | _PAW else "hard"
    if pi == "chi" and kind == "delete":
        return "polynomial" if probe in _P4 | _P1P3 else "hard"
    return "polynomial" if probe in _P4 else "hard"


def test_criterion_11_classifier():
    clock, failures = Clock(60), []
    for probe in PROBES:
        h = named_graph(probe)
        for pi in PARAMS:
            for kind in ("contract", "delete"):
                got = classify(h, pi, kind).verdict
                if got != _expected(probe, pi, kind):
                    failures.append((probe, pi, kind, got))
    finish(11, failures, 6 * len(PROBES), clock, "grid cells")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

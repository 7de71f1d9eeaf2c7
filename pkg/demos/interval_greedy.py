"""
Greedy blockers on interval graphs
==================================

Sweep the clique path from the left; whenever a maximal clique is still
too large, merge (or delete) the intervals in it that reach furthest to
the right.  Those intervals also lie in the most cliques further on.
"""

from blockers.generators import random_interval
from blockers.graph import apply_witness
from blockers.oracle import oracle_min_k
from blockers.params import omega
from blockers.recognize import clique_path
from blockers.solvers import interval_contraction_blocker, interval_deletion_blocker

g, model = random_interval(10, seed=4)
print("intervals:")
print(model.format(), end="")
print("clique sizes along the path:", [len(c) for c in clique_path(model)])
w = omega(g)

for d in range(1, w + 1):
    for kind, solver in (("contract", interval_contraction_blocker),
                         ("delete", interval_deletion_blocker)):
        ans = solver(model, "omega", d, graph=g)
        exact = oracle_min_k(g, "omega", kind, d, size_guard=None)
        if ans.decision:
            after = omega(apply_witness(g, ans.witness))
            print(f"d={d} {kind:8s}: greedy {ans.min_k} ops (omega {w} -> {after}), "
                  f"exhaustive {exact.min_k}")
        else:
            print(f"d={d} {kind:8s}: infeasible (exhaustive agrees: {not exact.feasible})")

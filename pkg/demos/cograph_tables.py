"""
Mixed budgets on cographs
=========================

The cotree DP fills, for every node, a table indexed by (contractions,
deletions).  Here the root table of a small cograph is printed next to
the exhaustive search answer for each of the three parameters.
"""

from blockers.generators import random_cograph
from blockers.oracle import oracle_drop_table
from blockers.recognize import cotree
from blockers.solvers import cograph_blocker

g = random_cograph(8, seed=12)
print("cotree:", cotree(g).dump())

for pi in ("alpha", "omega", "chi"):
    table = cograph_blocker(g, pi, 3, 0)
    truth = oracle_drop_table(g, pi, 3)
    print(f"\n{pi} = {table.value}; best drop by (contractions, deletions)")
    for i in range(4):
        row = "  ".join(f"{table.max_drop(i, j)}" for j in range(4 - i))
        print(f"  i={i}: {row}")
    print("  matches exhaustive search:", table.root == truth)

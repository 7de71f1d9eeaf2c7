"""
A clique-number gadget from a one-in-three formula
==================================================

Each variable becomes a triangle with two pendant vertices and each clause
a triangle wired to its literals.  One contraction per triangle lowers the
clique number from three to two exactly when the formula has an assignment
making one literal per clause true.
"""

from blockers.graph import apply_witness, format_witness
from blockers.oracle import verify_witness
from blockers.params import omega
from blockers.reductions import (CnfFormula, one_in_three_brute_force, one_in_three_witness,
                                 reduce_1in3sat_to_omega)

# (x or y or not z) and (not x or y or z)
formula = CnfFormula(3, ((1, 2, -3), (-1, 2, 3)))
inst = reduce_1in3sat_to_omega(formula)
g = inst.graph
print(f"gadget: {g.n} vertices, {g.m} edges, omega = {omega(g)}, budget k = {inst.k}")

# an assignment with exactly one true literal per clause
assignment = one_in_three_brute_force(formula)
print("assignment:", {f"x{v}": val for v, val in sorted(assignment.items())})

# turn it into contractions and replay them
witness = one_in_three_witness(formula, assignment)
print("witness:")
print(format_witness(witness), end="")
print("verified:", verify_witness(inst, witness))
print("omega after:", omega(apply_witness(g, witness)))

# a formula with no one-in-three assignment
bad = CnfFormula(3, ((1, 2, 3), (1, -2, 3), (1, 2, -3)))
print("\nunsatisfiable formula has an assignment:", one_in_three_brute_force(bad) is not None)

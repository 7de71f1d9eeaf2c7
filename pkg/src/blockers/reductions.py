"""Hardness gadgets: source instances turned into blocker instances.

Each builder lays out vertex ids deterministically so that outputs can be
compared against golden files.  Brute-force deciders for the source
problems live at the bottom; they are what the equivalence tests compare
the oracle against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .errors import NotInClassError, PreconditionError, SizeGuardError
from .graph import (Contract, Graph, complement, connected_components,
                    disjoint_union, subdivide_edge)
from .oracle import BlockerInstance
from .params import Parameter, alpha, bipartition, chi, max_independent_set
from .recognize import is_cobipartite

__all__ = [
    "CnfFormula", "RbdsInstance",
    "reduce_rbds_to_split_alpha", "reduce_rbds_to_split_chi",
    "OneInThreeLayout", "one_in_three_layout", "reduce_1in3sat_to_omega",
    "one_in_three_witness", "lift_to_c4free_perfect", "reduce_vc_to_chordal",
    "reduce_cobipartite_alpha_to_bipartite", "reduce_biclique_to_cobipartite_chi",
    "girth", "girth_lift", "reduce_forced_vertex", "clique_proof_lift",
    "has_forced_vertex", "rbds_brute_force", "one_in_three_brute_force",
    "vertex_cover_brute_force", "biclique_partition3_brute_force",
]


# -- source problem types -------------------------------------------------------

@dataclass(frozen=True)
class CnfFormula:
    """Clauses of exactly three literals; literal ``+i`` / ``-i`` refers to
    variable ``i`` in ``1..num_vars`` (DIMACS convention)."""
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise PreconditionError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise PreconditionError(f"literal {lit} out of range")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def parse_dimacs(cls, text: str) -> "CnfFormula":
        num_vars = None
        lits: list[int] = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("c") or line.startswith("%"):
                continue
            if line.startswith("p"):
                parts = line.split()
                if len(parts) != 4 or parts[1] != "cnf":
                    raise PreconditionError(f"bad problem line {line!r}")
                num_vars = int(parts[2])
                continue
            lits += [int(t) for t in line.split()]
        if num_vars is None:
            raise PreconditionError("missing 'p cnf' line")
        clauses, cur = [], []
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(lit)
        if cur:
            raise PreconditionError("last clause is not terminated by 0")
        return cls(num_vars, tuple(clauses))

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RbdsInstance:
    """Red-blue domination: can at most ``k`` blue vertices dominate all red ones?"""
    B: frozenset[int]
    R: frozenset[int]
    edges: frozenset[tuple[int, int]]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "R", frozenset(self.R))
        object.__setattr__(self, "edges", frozenset(
            (min(a, b), max(a, b)) for a, b in self.edges))
        if self.B & self.R:
            raise PreconditionError("B and R must be disjoint")
        for a, b in self.edges:
            if not ((a in self.B and b in self.R) or (a in self.R and b in self.B)):
                raise PreconditionError(f"edge {a} {b} does not join B to R")
        if self.k < 0:
            raise PreconditionError("k must be non-negative")

    def graph(self) -> Graph:
        return Graph(self.B | self.R, self.edges)

    def check_normalized(self) -> None:
        if not self.R:
            raise PreconditionError("R must be non-empty")
        if self.k > len(self.B):
            raise PreconditionError("k must not exceed |B|")
        g = self.graph()
        lonely = [r for r in sorted(self.R) if not g.neighbors(r)]
        if lonely:
            raise PreconditionError(f"red vertices without a blue neighbour: {lonely}")
        idle = [b for b in sorted(self.B) if not g.neighbors(b)]
        if idle:
            raise PreconditionError(f"blue vertices without a red neighbour: {idle}")

    def normalized(self) -> "RbdsInstance":
        """Drop blue vertices that dominate nothing and cap ``k`` at ``|B|``.
        Neither change affects the answer."""
        g = self.graph()
        blue = frozenset(b for b in self.B if g.neighbors(b))
        return RbdsInstance(blue, self.R, self.edges, min(self.k, len(blue)))

    @classmethod
    def parse(cls, text: str) -> "RbdsInstance":
        B = R = None
        k = None
        edges = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(":")
            if rest or line.endswith(":"):
                key = head.strip().upper()
                values = [int(t) for t in rest.split()]
                if key == "B":
                    B = values
                elif key == "R":
                    R = values
                elif key == "K":
                    k = values[0]
                else:
                    raise PreconditionError(f"unknown header {head!r}")
            else:
                a, b = map(int, line.split())
                edges.append((a, b))
        if B is None or R is None or k is None:
            raise PreconditionError("RBDS input needs B:, R: and k: lines")
        return cls(frozenset(B), frozenset(R), frozenset(edges), k)

    def format(self) -> str:
        lines = ["B: " + " ".join(map(str, sorted(self.B))),
                 "R: " + " ".join(map(str, sorted(self.R))),
                 f"k: {self.k}"]
        lines += [f"{a} {b}" for a, b in sorted(self.edges)]
        return "\n".join(lines) + "\n"


# -- split graph reductions -----------------------------------------------------

def reduce_rbds_to_split_alpha(inst: RbdsInstance) -> BlockerInstance:
    """Complete R to a clique; ask for an alpha drop of ``|B| - k`` with as
    many contractions."""
    inst.check_normalized()
    edges = list(inst.edges) + list(combinations(sorted(inst.R), 2))
    g = Graph(inst.B | inst.R, edges)
    d = len(inst.B) - inst.k
    return BlockerInstance(g, Parameter.ALPHA, "contract", d, d)


def reduce_rbds_to_split_chi(inst: RbdsInstance) -> BlockerInstance:
    """Bipartite complement between B and R, B completed to a clique, plus
    a vertex ``x = max id + 1`` adjacent to everything."""
    inst.check_normalized()
    blue, red = sorted(inst.B), sorted(inst.R)
    edges = [(b, r) for b in blue for r in red
             if (min(b, r), max(b, r)) not in inst.edges]
    edges += list(combinations(blue, 2))
    x = max(blue + red) + 1
    edges += [(x, v) for v in blue + red]
    g = Graph(blue + red + [x], edges)
    d = len(blue) - inst.k
    return BlockerInstance(g, Parameter.CHI, "contract", d, d)


# -- one-in-three SAT ---------------------------------------------------------------

@dataclass(frozen=True)
class OneInThreeLayout:
    """Vertex ids of the gadget.

    Variable ``i`` (1-based) owns ``t, u, w, q, p`` at ``5(i-1) .. 5(i-1)+4``:
    triangle ``t u w`` and square ``u w q p`` share the edge ``u w``; the
    positive literal is the edge ``t u`` and the negative one ``t w``.
    Clause ``c`` (0-based) owns ``c0, c1, c2`` at ``5n + 3c + j``; its literal
    in position ``j`` is the edge ``c_j c_{j+1 mod 3}``, matched with ``c_j``
    to ``t`` and ``c_{j+1}`` to ``u`` (positive) or ``w`` (negative).
    """
    num_vars: int
    num_clauses: int

    def var(self, i: int) -> dict[str, int]:
        base = 5 * (i - 1)
        return dict(zip("tuwqp", range(base, base + 5)))

    def clause(self, c: int) -> tuple[int, int, int]:
        base = 5 * self.num_vars + 3 * c
        return (base, base + 1, base + 2)

    def literal_edge(self, lit: int) -> tuple[int, int]:
        v = self.var(abs(lit))
        return (v["t"], v["u"] if lit > 0 else v["w"])


def one_in_three_layout(f: CnfFormula) -> OneInThreeLayout:
    return OneInThreeLayout(f.num_vars, len(f.clauses))


def reduce_1in3sat_to_omega(f: CnfFormula) -> BlockerInstance:
    """Clauses must use three distinct variables; a repeated variable would
    put a clause vertex next to both ends of one literal edge."""
    for clause in f.clauses:
        if len({abs(l) for l in clause}) != 3:
            raise PreconditionError(f"clause {clause} repeats a variable")
    lay = one_in_three_layout(f)
    vertices = list(range(5 * f.num_vars + 3 * len(f.clauses)))
    edges = []
    for i in range(1, f.num_vars + 1):
        v = lay.var(i)
        edges += [(v["t"], v["u"]), (v["t"], v["w"]), (v["u"], v["w"]),
                  (v["w"], v["q"]), (v["q"], v["p"]), (v["p"], v["u"])]
    for c, clause in enumerate(f.clauses):
        cv = lay.clause(c)
        edges += [(cv[0], cv[1]), (cv[1], cv[2]), (cv[2], cv[0])]
        for j, lit in enumerate(clause):
            t, side = lay.literal_edge(lit)
            edges += [(cv[j], t), (cv[(j + 1) % 3], side)]
    g = Graph(vertices, edges)
    return BlockerInstance(g, Parameter.OMEGA, "contract", 1, f.num_vars + len(f.clauses))


def one_in_three_witness(f: CnfFormula, assignment: dict[int, bool]) -> list:
    """Contractions for a one-in-three assignment: one literal edge per
    variable gadget, then the true literal's edge in each clause triangle."""
    lay = one_in_three_layout(f)
    ops = []
    for i in range(1, f.num_vars + 1):
        t, side = lay.literal_edge(i if assignment[i] else -i)
        ops.append(Contract(side, t))
    for c, clause in enumerate(f.clauses):
        truth = [assignment[abs(l)] == (l > 0) for l in clause]
        if truth.count(True) != 1:
            raise PreconditionError(f"clause {c} does not have exactly one true literal")
        j = truth.index(True)
        cv = lay.clause(c)
        ops.append(Contract(cv[(j + 1) % 3], cv[j]))
    return ops


def lift_to_c4free_perfect(g: Graph, k: int) -> BlockerInstance:
    """Subdivide every edge ``uv`` (u < v) by a new vertex ``s`` and attach two
    non-adjacent vertices to both ``u`` and ``s``.  New ids are handed out
    in edge order as ``s, u_e, v_e``.  The budget grows by one contraction
    per original edge."""
    nxt = g.max_id() + 1
    edges = []
    for u, v in g.edges():
        s, ue, ve = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(u, s), (s, v), (ue, u), (ue, s), (ve, u), (ve, s)]
    vertices = g.vertices + list(range(g.max_id() + 1, nxt))
    return BlockerInstance(Graph(vertices, edges), Parameter.OMEGA, "contract", 1, k + g.m)


# -- chordal and bipartite gadgets ------------------------------------------------------

def reduce_vc_to_chordal(g: Graph, k: int) -> BlockerInstance:
    """Vertex ``i`` of ``g`` (in sorted order) becomes ``i``; edge number
    ``e`` becomes the clique ``n + e*n .. n + e*n + n - 1``; the universal
    vertex ``y`` comes last."""
    if g.m == 0:
        raise PreconditionError("vertex cover reduction needs at least one edge")
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = list(combinations(range(n), 2))
    for e, (a, b) in enumerate(g.edges()):
        block = list(range(n + e * n, n + (e + 1) * n))
        edges += list(combinations(block, 2))
        edges += [(x, idx[a]) for x in block] + [(x, idx[b]) for x in block]
    y = n + g.m * n
    edges += [(y, v) for v in range(y)]
    return BlockerInstance(Graph(range(y + 1), edges), Parameter.OMEGA, "contract", 1, k)


def reduce_cobipartite_alpha_to_bipartite(g: Graph, k: int) -> BlockerInstance:
    """Add three dominating vertices, then subdivide every edge once."""
    if not is_cobipartite(g):
        raise NotInClassError("input is not cobipartite")
    if g.m == 0:
        raise PreconditionError("input has no edges")
    if g.m == g.n * (g.n - 1) // 2:
        raise PreconditionError("input is complete; alpha cannot drop")
    top = g.max_id() + 1
    dom = [top, top + 1, top + 2]
    edges = g.edges() + list(combinations(dom, 2)) + [(x, v) for x in dom for v in g.vertices]
    plus = Graph(g.vertices + dom, edges)
    nxt = plus.max_id() + 1
    sub_edges = []
    for a, b in plus.edges():
        sub_edges += [(a, nxt), (nxt, b)]
        nxt += 1
    out = Graph(plus.vertices + list(range(plus.max_id() + 1, nxt)), sub_edges)
    return BlockerInstance(out, Parameter.ALPHA, "contract",
                           alpha(out, limit=None) - 1, k + plus.m)


def reduce_biclique_to_cobipartite_chi(g: Graph) -> BlockerInstance:
    if g.n < 6:
        raise PreconditionError("biclique reduction needs at least six vertices")
    if len(connected_components(g)) != 1:
        raise PreconditionError("biclique reduction needs a connected graph")
    if bipartition(g) is None:
        raise NotInClassError("input is not bipartite")
    co = complement(g)
    return BlockerInstance(co, Parameter.CHI, "contract", chi(co, limit=None) - 3, g.n - 6)


# -- girth and clique-proof lifts -------------------------------------------------------

def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    best = None
    for s in g.vertices:
        dist, parent = {s: 0}, {s: None}
        queue = [s]
        for x in queue:
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y], parent[y] = dist[x] + 1, x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def girth_lift(g: Graph, p: int) -> Graph:
    """Subdivide every edge twice, repeating until the girth exceeds ``p``.

    At least one round is always applied.  Each double subdivision keeps
    the existence of a vertex lying in every maximum independent set.
    """
    while True:
        for u, v in g.edges():
            g = subdivide_edge(g, u, v, 2)
        gi = girth(g)
        if gi is None or gi > p:
            return g


def reduce_forced_vertex(g: Graph, p: int) -> BlockerInstance:
    """A forced vertex exists iff one deletion lowers alpha."""
    return BlockerInstance(girth_lift(g, p), Parameter.ALPHA, "delete", 1, 1)


def clique_proof_lift(g: Graph, l: int) -> BlockerInstance:
    """``2G + K_{l+1}``: one contraction lowers omega iff ``omega(G) <= l``."""
    if l < 1:
        raise PreconditionError("l must be at least 1")
    two, _ = disjoint_union(g, g)
    kl = Graph(range(l + 1), combinations(range(l + 1), 2))
    out, _ = disjoint_union(two, kl)
    return BlockerInstance(out, Parameter.OMEGA, "contract", 1, 1)


# -- brute-force deciders for the source problems ---------------------------------------------

def has_forced_vertex(g: Graph, limit: int = 40) -> bool:
    """Some vertex lies in every maximum independent set."""
    if g.n > limit:
        raise SizeGuardError(f"forced-vertex search is limited to {limit} vertices")
    if g.n == 0:
        return False
    size = len(max_independent_set(g, limit=None))
    common: Optional[set[int]] = None
    order = g.vertices

    def rec(start: int, chosen: list[int], blocked: set[int]) -> None:
        nonlocal common
        if common is not None and not common:
            return
        if len(chosen) == size:
            common = set(chosen) if common is None else common & set(chosen)
            return
        for i in range(start, len(order)):
            if len(chosen) + len(order) - i < size:
                return
            v = order[i]
            if v in blocked:
                continue
            rec(i + 1, chosen + [v], blocked | g.neighbors(v))

    rec(0, [], set())
    return bool(common)


def rbds_brute_force(inst: RbdsInstance) -> bool:
    g = inst.graph()
    for size in range(min(inst.k, len(inst.B)) + 1):
        for dom in combinations(sorted(inst.B), size):
            covered = set()
            for b in dom:
                covered |= g.neighbors(b)
            if inst.R <= covered:
                return True
    return False


def one_in_three_brute_force(f: CnfFormula) -> Optional[dict[int, bool]]:
    """A satisfying one-in-three assignment, or None."""
    for values in product((False, True), repeat=f.num_vars):
        assign = {i + 1: val for i, val in enumerate(values)}
        if all(sum(assign[abs(l)] == (l > 0) for l in c) == 1 for c in f.clauses):
            return assign
    return None


def vertex_cover_brute_force(g: Graph, k: int) -> bool:
    edges = g.edges()
    for size in range(min(k, g.n) + 1):
        for cover in combinations(g.vertices, size):
            cs = set(cover)
            if all(a in cs or b in cs for a, b in edges):
                return True
    return False


def biclique_partition3_brute_force(g: Graph) -> bool:
    """Vertex partition into three bicliques, each with at least one edge."""
    parts = bipartition(g)
    if parts is None:
        raise NotInClassError("input is not bipartite")
    left, _ = parts
    vs = g.vertices
    if len(vs) < 6:
        return False
    first = vs[0]
    for labels in product(range(3), repeat=len(vs) - 1):
        groups: list[list[int]] = [[first], [], []]
        for v, lab in zip(vs[1:], labels):
            groups[lab].append(v)
        if all(_is_nontrivial_biclique(g, grp, left) for grp in groups):
            return True
    return False


def _is_nontrivial_biclique(g: Graph, group: list[int], left) -> bool:
    xs = [v for v in group if v in left]
    ys = [v for v in group if v not in left]
    return bool(xs) and bool(ys) and all(g.has_edge(a, b) for a in xs for b in ys)

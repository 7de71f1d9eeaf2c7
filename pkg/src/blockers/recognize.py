"""Class membership tests with certificates, and the H-free classifier.

Recognizers return a certificate on success (a cotree, a split
partition, an embedding) and a falsy value otherwise, so callers can
write ``if (t := cotree(g)):``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .errors import PreconditionError, SizeGuardError
from .graph import (Graph, complement, connected_components, cycle_graph,
                    induced_subgraph, path_graph)
from .params import (Parameter, _bits, _clique_search, _colour_with,
                     has_independent_triple, is_bipartite)

__all__ = [
    "CotreeLeaf", "CotreeNode", "Cotree", "NotCograph", "cotree", "is_cograph",
    "parse_cotree",
    "SplitPartition", "split_partition", "is_split",
    "IntervalModel", "validate_interval_model", "clique_path", "interval_graph",
    "find_interval_model", "maximal_cliques",
    "find_induced", "is_H_free", "is_induced_subgraph", "is_chordal",
    "is_perfect_small", "is_tree", "is_bipartite", "is_cobipartite",
    "is_3p1_free", "is_p1p3_free", "is_triangle_free", "is_c4_free",
    "named_graph", "Dichotomy", "classify", "OpKind",
]

OpKind = str  # "contract" | "delete"


# -- cotrees ----------------------------------------------------------------

@dataclass(frozen=True)
class CotreeLeaf:
    vertex: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.vertex,))

    def evaluate(self) -> Graph:
        return Graph((self.vertex,))

    def dump(self) -> str:
        return str(self.vertex)


@dataclass(frozen=True)
class CotreeNode:
    """Internal node: ``label`` is ``"u"`` (disjoint union) or ``"j"`` (join)."""
    label: str
    left: "Cotree"
    right: "Cotree"
    vertices: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.label not in ("u", "j"):
            raise ValueError(f"bad cotree label {self.label!r}")
        object.__setattr__(self, "vertices", self.left.vertices | self.right.vertices)

    def evaluate(self) -> Graph:
        a, b = self.left.evaluate(), self.right.evaluate()
        edges = a.edges() + b.edges()
        if self.label == "j":
            edges += [(x, y) for x in a.vertices for y in b.vertices]
        return Graph(a.vertices + b.vertices, edges)

    def dump(self) -> str:
        return f"({self.label} {self.left.dump()} {self.right.dump()})"


Cotree = Union[CotreeLeaf, CotreeNode]


@dataclass(frozen=True)
class NotCograph:
    """Refusal certificate: an induced path ``p4[0]-p4[1]-p4[2]-p4[3]``."""
    p4: tuple[int, int, int, int]

    def __bool__(self) -> bool:
        return False


def _fold(label: str, children: list[Cotree]) -> Cotree:
    children = sorted(children, key=lambda t: min(t.vertices))
    node = children[0]
    for child in children[1:]:
        node = CotreeNode(label, node, child)
    return node


def cotree(g: Graph) -> Union[Cotree, NotCograph]:
    """Binary cotree of a cograph, or an induced P4 as a refusal.

    Raises :class:`PreconditionError` on the empty graph, which has no tree.
    """
    if g.n == 0:
        raise PreconditionError("the empty graph has no cotree")

    def build(sub: Graph) -> Union[Cotree, NotCograph]:
        if sub.n == 1:
            return CotreeLeaf(sub.vertices[0])
        for label, host in (("u", sub), ("j", complement(sub))):
            comps = connected_components(host)
            if len(comps) > 1:
                kids = []
                for c in comps:
                    t = build(induced_subgraph(sub, c))
                    if not t:
                        return t
                    kids.append(t)
                return _fold(label, kids)
        emb = find_induced(sub, path_graph(4))
        assert emb is not None, "prime graph without an induced P4"
        return NotCograph(tuple(emb[i] for i in range(4)))

    return build(g)


def is_cograph(g: Graph) -> bool:
    return g.n == 0 or bool(cotree(g))


def parse_cotree(text: str) -> Cotree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> Cotree:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok != "(":
            return CotreeLeaf(int(tok))
        label = tokens[pos]
        pos += 1
        left = parse()
        right = parse()
        if tokens[pos] != ")":
            raise ValueError("cotree nodes must have exactly two children")
        pos += 1
        return CotreeNode(label, left, right)

    tree = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens after cotree")
    return tree


# -- split graphs -----------------------------------------------------------

@dataclass(frozen=True)
class SplitPartition:
    K: frozenset[int]
    I: frozenset[int]
    flavor: str = "any"


def split_partition(g: Graph, flavor: str = "any") -> Optional[SplitPartition]:
    """A split partition of the requested flavor, or None if ``g`` is not split.

    ``minimal``: every clique vertex has a neighbour in ``I`` (then alpha = |I|).
    ``maximal``: every vertex of ``I`` misses some clique vertex (then omega = |K|).
    """
    if flavor not in ("any", "minimal", "maximal"):
        raise ValueError(f"unknown flavor {flavor!r}")
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i, dv in enumerate(degs, start=1):
        if dv >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    K, I = set(order[:m]), set(order[m:])
    # the degree test guarantees this; keep an explicit check as a safeguard
    if any(not g.has_edge(a, b) for a, b in combinations(K, 2)) or \
            any(g.has_edge(a, b) for a, b in combinations(I, 2)):
        return None
    if flavor == "minimal":
        for v in sorted(K):
            if not (g.neighbors(v) & I):
                K.remove(v)
                I.add(v)
                break
    elif flavor == "maximal":
        for v in sorted(I):
            if K <= g.neighbors(v):
                I.remove(v)
                K.add(v)
                break
    return SplitPartition(frozenset(K), frozenset(I), flavor)


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


# -- interval graphs ----------------------------------------------------------

class IntervalModel:
    """Closed integer intervals ``[l, r]`` indexed by vertex id."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: dict[int, tuple[int, int]]):
        clean = {}
        for v, (l, r) in intervals.items():
            if l > r:
                raise PreconditionError(f"interval of {v} has l > r")
            clean[v] = (int(l), int(r))
        self.intervals = clean

    @property
    def vertices(self) -> list[int]:
        return sorted(self.intervals)

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.intervals[v]

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntervalModel) and self.intervals == other.intervals

    def __repr__(self) -> str:
        return f"IntervalModel({self.intervals})"

    @classmethod
    def parse(cls, text: str) -> "IntervalModel":
        data = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise PreconditionError(f"bad interval line {line!r}")
            v, l, r = map(int, parts)
            if v in data:
                raise PreconditionError(f"vertex {v} listed twice")
            data[v] = (l, r)
        return cls(data)

    def format(self) -> str:
        return "".join(f"{v} {l} {r}\n" for v, (l, r) in sorted(self.intervals.items()))


def interval_graph(model: IntervalModel) -> Graph:
    vs = model.vertices
    edges = [(a, b) for a, b in combinations(vs, 2)
             if model[a][0] <= model[b][1] and model[b][0] <= model[a][1]]
    return Graph(vs, edges)


def validate_interval_model(g: Graph, model: IntervalModel) -> bool:
    if set(model.vertices) != set(g.vertices):
        raise PreconditionError("interval model does not cover exactly the graph's vertices")
    return interval_graph(model) == g


def clique_path(model: IntervalModel) -> list[frozenset[int]]:
    """Maximal cliques from left to right, by sweeping endpoint events.

    Left endpoints sort before right endpoints at equal coordinates since
    intervals are closed.  A maximal clique is emitted at each right
    endpoint that directly follows a left endpoint.
    """
    events = []
    for v, (l, r) in model.intervals.items():
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    active: set[int] = set()
    out = []
    last_was_left = False
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            last_was_left = True
        else:
            if last_was_left:
                out.append(frozenset(active))
            active.discard(v)
            last_was_left = False
    return out


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    order, masks = g.index()
    out: list[frozenset[int]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(order[i] for i in _bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (masks[u] & p).bit_count())
        for v in list(_bits(p & ~masks[pivot])):
            bit = 1 << v
            bk(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    if order:
        bk(0, (1 << len(order)) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


def find_interval_model(g: Graph, limit: int = 10) -> Optional[IntervalModel]:
    """Brute-force interval model: search orderings of the maximal cliques
    in which every vertex's cliques are consecutive.  Test helper only."""
    if g.n > limit:
        raise SizeGuardError(f"interval model search is limited to {limit} vertices")
    if g.n == 0:
        return IntervalModel({})
    cliques = maximal_cliques(g)

    def consistent(seq: list[frozenset[int]]) -> bool:
        # a vertex that left the run may not reappear
        closed: set[int] = set()
        for a, b in zip(seq, seq[1:]):
            closed |= a - b
            if closed & b:
                return False
        return True

    def rec(seq: list[frozenset[int]], rest: list[frozenset[int]]) -> Optional[list]:
        if not rest:
            return seq
        for i, c in enumerate(rest):
            nxt = seq + [c]
            if consistent(nxt):
                got = rec(nxt, rest[:i] + rest[i + 1:])
                if got is not None:
                    return got
        return None

    seq = rec([], cliques)
    if seq is None:
        return None
    spans = {}
    for i, c in enumerate(seq):
        for v in c:
            l, _ = spans.get(v, (i, i))
            spans[v] = (l, i)
    return IntervalModel({v: (2 * l, 2 * r) for v, (l, r) in spans.items()})


# -- induced subgraphs ---------------------------------------------------------

H_LIMIT = 8


def find_induced(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An induced embedding ``V(h) -> V(g)``, or None."""
    if h.n > H_LIMIT:
        raise SizeGuardError(f"pattern graphs are limited to {H_LIMIT} vertices")
    if h.n > g.n:
        return None
    # place pattern vertices so that each one (after the first of its
    # component) has an earlier neighbour, which keeps candidate sets small
    order: list[int] = []
    for comp in connected_components(h):
        start = min(comp, key=lambda v: (-h.degree(v), v))
        seen = [start]
        i = 0
        while i < len(seen):
            for w in sorted(h.neighbors(seen[i])):
                if w not in seen:
                    seen.append(w)
            i += 1
        order += seen
    gvs = g.vertices
    emb: dict[int, int] = {}
    used: set[int] = set()

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        x = order[idx]
        placed = [y for y in order[:idx] if h.has_edge(x, y)]
        cands = g.neighbors(emb[placed[0]]) if placed else gvs
        for v in sorted(cands):
            if v in used or g.degree(v) < h.degree(x):
                continue
            if all(g.has_edge(v, emb[y]) == h.has_edge(x, y) for y in order[:idx]):
                emb[x] = v
                used.add(v)
                if rec(idx + 1):
                    return True
                used.discard(v)
                del emb[x]
        return False

    return dict(emb) if rec(0) else None


def is_H_free(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is None


def is_induced_subgraph(h: Graph, g: Graph) -> bool:
    """``h`` is isomorphic to an induced subgraph of ``g``."""
    return find_induced(g, h) is not None


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by a perfect-elimination check."""
    weight = {v: 0 for v in g.vertices}
    order: list[int] = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for w in g.neighbors(v):
            if w in weight:
                weight[w] += 1
    # reversed MCS order is a perfect elimination ordering iff g is chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        if any(w != parent and not g.has_edge(w, parent) for w in earlier):
            return False
    return True


def is_perfect_small(g: Graph, limit: int = 12) -> bool:
    """Check chi = omega on every induced subgraph (exhaustive).

    Subsets inducing a disconnected graph or the complement of one are
    skipped: both parameters decompose over such splits in the same way,
    so the parts (checked separately) decide them.
    """
    if g.n > limit:
        raise SizeGuardError(f"perfectness check is limited to {limit} vertices")
    _, masks = g.index()
    n = len(masks)
    full = (1 << n) - 1
    comasks = [full & ~m & ~(1 << i) for i, m in enumerate(masks)]

    def connected(s: int, nb: list[int]) -> bool:
        low = s & -s
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= nb[v]
            nxt &= s & ~seen
            seen |= nxt
            frontier = nxt
        return seen == s

    for s in range(1, full + 1):
        if s.bit_count() < 5:
            continue
        if not connected(s, masks) or not connected(s, comasks):
            continue
        idx = list(_bits(s))
        pos = {v: i for i, v in enumerate(idx)}
        sub = []
        for v in idx:
            row = 0
            for w in _bits(masks[v] & s):
                row |= 1 << pos[w]
            sub.append(row)
        w = _clique_search(sub, (1 << len(idx)) - 1).bit_count()
        if _colour_with(sub, w) is None:
            return False
    return True


# -- named classes ---------------------------------------------------------------

def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(connected_components(g)) == 1


def is_cobipartite(g: Graph) -> bool:
    return is_bipartite(complement(g))


def is_3p1_free(g: Graph) -> bool:
    return not has_independent_triple(g)


def is_triangle_free(g: Graph) -> bool:
    return is_3p1_free(complement(g))


def is_p1p3_free(g: Graph) -> bool:
    return is_H_free(g, named_graph("P1+P3"))


def is_c4_free(g: Graph) -> bool:
    return is_H_free(g, cycle_graph(4))


def named_graph(name: str) -> Graph:
    """Small pattern graphs by name: ``Pn``, ``Cn``, ``Kn``, ``nP1``, ``2P2``,
    ``K1,3``, ``paw``, ``P1+P3``, ``C3+P1``."""
    key = name.replace(" ", "").replace("⊕", "+").lower()
    if key == "paw":
        return Graph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
    if key in ("k1,3", "claw"):
        return Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    if key == "2p2":
        return Graph(range(4), [(0, 1), (2, 3)])
    if key == "p1+p3":
        return Graph(range(4), [(1, 2), (2, 3)])
    if key == "c3+p1":
        return Graph(range(4), [(0, 1), (1, 2), (0, 2)])
    if key.endswith("p1") and key[:-2].isdigit():
        return Graph(range(int(key[:-2])))
    if key[0] in "pck" and key[1:].isdigit():
        n = int(key[1:])
        if key[0] == "p":
            return path_graph(n)
        if key[0] == "c":
            return cycle_graph(n)
        return Graph(range(n), combinations(range(n), 2))
    raise ValueError(f"unknown graph name {name!r}")


# -- the H-free dichotomy -----------------------------------------------------------

@dataclass(frozen=True)
class Dichotomy:
    verdict: str  # "polynomial" | "hard" | "open"
    citation: str

    def __str__(self) -> str:
        return f"{self.verdict} [{self.citation}]"


def classify(h: Graph, pi: "Parameter | str", kind: OpKind) -> Dichotomy:
    """Complexity of the blocker problem (pi, kind) restricted to H-free graphs.

    "hard" stands for NP-hard or co-NP-hard; the classification does not
    say which one holds for every H.
    """
    pi = Parameter.parse(pi)
    if kind not in ("contract", "delete"):
        raise ValueError(f"unknown operation kind {kind!r}")
    if h.n > H_LIMIT:
        raise SizeGuardError(f"pattern graphs are limited to {H_LIMIT} vertices")
    in_p4 = is_induced_subgraph(h, path_graph(4))
    problem = f"{pi.value} {'deletion' if kind == 'delete' else 'contraction'}"

    def poly(reason: str) -> Dichotomy:
        return Dichotomy("polynomial", f"{problem}: H is an induced subgraph of {reason}")

    def hard(reasons: str) -> Dichotomy:
        return Dichotomy("hard", f"{problem}: H is not an induced subgraph of {reasons}")

    if pi is Parameter.OMEGA and kind == "contract":
        if h.n == 4 and h.m == 3 and is_induced_subgraph(named_graph("C3+P1"), h):
            return Dichotomy("open", f"{problem}: H is C3+P1, the one unresolved case")
        if in_p4:
            return poly("P4")
        if is_induced_subgraph(h, named_graph("paw")):
            return poly("the paw")
        return hard("P4 or the paw")
    if pi is Parameter.CHI and kind == "delete":
        if in_p4:
            return poly("P4")
        if is_induced_subgraph(h, named_graph("P1+P3")):
            return poly("P1+P3")
        return hard("P4 or P1+P3")
    return poly("P4") if in_p4 else hard("P4")

"""Immutable simple graphs and the elementary operations on them.

Vertex ids are non-negative integers that survive every operation:
contracting ``(u, v)`` removes ``u`` and keeps ``v`` as the merged vertex,
so a witness (a list of operations) can be replayed unambiguously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import PreconditionError, WitnessError

__all__ = [
    "Graph", "Contract", "Delete", "Operation", "Witness",
    "contract_edge", "delete_vertex", "complement", "disjoint_union", "join",
    "induced_subgraph", "subdivide_edge", "connected_components",
    "apply_op", "apply_witness",
    "path_graph", "cycle_graph", "complete_graph", "empty_graph", "star_graph",
    "complete_bipartite_graph",
    "parse_edge_list", "format_edge_list", "parse_witness", "format_witness",
]


class Graph:
    """A finite simple undirected graph with stable integer vertex ids.

    Instances are immutable; every transformation returns a new graph.
    Endpoints of ``edges`` are added to the vertex set automatically.
    """

    __slots__ = ("_adj", "_key", "_index")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_id(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_id(u)
            _check_id(v)
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._key = None
        self._index = None

    @classmethod
    def _raw(cls, adj: dict[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = adj
        g._key = None
        g._index = None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in sorted order."""
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise PreconditionError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self._adj)

    def key(self) -> tuple:
        """Hashable identity of the labelled graph (ids and edges)."""
        if self._key is None:
            self._key = (tuple(self.vertices), tuple(self.edges()))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def index(self) -> tuple[list[int], list[int]]:
        """Return ``(order, masks)``: sorted vertex ids and per-vertex
        neighbourhood bitmasks over positions in ``order``."""
        if self._index is None:
            order = self.vertices
            pos = {v: i for i, v in enumerate(order)}
            masks = []
            for v in order:
                m = 0
                for w in self._adj[v]:
                    m |= 1 << pos[w]
                masks.append(m)
            self._index = (order, masks)
        return self._index

    def max_id(self) -> int:
        return max(self._adj) if self._adj else -1

    def relabel(self, mapping: dict[int, int]) -> Graph:
        """Rename vertices by ``mapping`` (must be injective on V)."""
        if len(set(mapping[v] for v in self._adj)) != len(self._adj):
            raise PreconditionError("relabel mapping is not injective")
        return Graph._raw({mapping[v]: frozenset(mapping[w] for w in nb)
                           for v, nb in self._adj.items()})

    # -- operations as methods ----------------------------------------

    def contract(self, u: int, v: int) -> Graph:
        return contract_edge(self, u, v)

    def delete(self, v: int) -> Graph:
        return delete_vertex(self, v)


def _check_id(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise PreconditionError(f"vertex ids must be non-negative integers, got {v!r}")


# -- operations ---------------------------------------------------------

def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract ``u`` onto ``v``; the merged vertex keeps id ``v``."""
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    adj = dict(g._adj)
    nu = adj.pop(u)
    merged = (nu | adj[v]) - {u, v}
    adj[v] = merged
    for w in nu:
        if w == v:
            continue
        nb = adj[w] - {u}
        adj[w] = nb | {v}
    for w in adj[v]:
        if u in adj[w]:
            adj[w] = adj[w] - {u}
    return Graph._raw(adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    if v not in g:
        raise PreconditionError(f"vertex {v} not in graph")
    adj = dict(g._adj)
    nv = adj.pop(v)
    for w in nv:
        adj[w] = adj[w] - {v}
    return Graph._raw(adj)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = set(keep)
    missing = keep - set(g._adj)
    if missing:
        raise PreconditionError(f"vertices {sorted(missing)} not in graph")
    return Graph._raw({v: g._adj[v] & keep for v in keep})


def complement(g: Graph) -> Graph:
    vs = frozenset(g._adj)
    return Graph._raw({v: vs - nb - {v} for v, nb in g._adj.items()})


def _offset_copy(g: Graph, h: Graph) -> tuple[Graph, dict[int, int]]:
    off = g.max_id() + 1
    mapping = {v: v + off for v in h.vertices}
    return h.relabel(mapping), mapping


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, dict[int, int]]:
    """``G ⊕ H``.  The ids of ``h`` are shifted past ``max(V(g))``; the
    shift map is returned with the result."""
    h2, mapping = _offset_copy(g, h)
    adj = dict(g._adj)
    adj.update(h2._adj)
    return Graph._raw(adj), mapping


def join(g: Graph, h: Graph) -> tuple[Graph, dict[int, int]]:
    """``G ⊗ H``: disjoint union plus every edge between the two sides."""
    h2, mapping = _offset_copy(g, h)
    left, right = frozenset(g._adj), frozenset(h2._adj)
    adj = {v: nb | right for v, nb in g._adj.items()}
    adj.update({v: nb | left for v, nb in h2._adj.items()})
    return Graph._raw(adj), mapping


def subdivide_edge(g: Graph, u: int, v: int, t: int = 1) -> Graph:
    """Replace edge ``uv`` by a path with ``t`` new internal vertices.

    New ids are ``max(V)+1, ..., max(V)+t`` in order from ``u`` to ``v``.
    """
    if t < 1:
        raise PreconditionError("subdivision count must be at least 1")
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    start = g.max_id() + 1
    path = [u] + list(range(start, start + t)) + [v]
    edges = [e for e in g.edges() if set(e) != {u, v}]
    edges += list(zip(path, path[1:]))
    return Graph(g.vertices, edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components in order of their smallest vertex id."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g._adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


# -- witnesses ----------------------------------------------------------

@dataclass(frozen=True)
class Contract:
    """Contract ``u`` onto ``v`` (``v`` survives)."""
    u: int
    v: int

    def __str__(self) -> str:
        return f"c {self.u} {self.v}"


@dataclass(frozen=True)
class Delete:
    v: int

    def __str__(self) -> str:
        return f"d {self.v}"


Operation = Union[Contract, Delete]
Witness = list  # list[Operation]


def apply_op(g: Graph, op: Operation) -> Graph:
    if isinstance(op, Contract):
        return contract_edge(g, op.u, op.v)
    if isinstance(op, Delete):
        return delete_vertex(g, op.v)
    raise TypeError(f"not an operation: {op!r}")


def apply_witness(g: Graph, ops: Iterable[Operation]) -> Graph:
    """Replay ``ops`` in order; a failing step raises :class:`WitnessError`
    naming its (0-based) position."""
    for i, op in enumerate(ops):
        try:
            g = apply_op(g, op)
        except PreconditionError as exc:
            raise WitnessError(i, str(exc)) from None
    return g


# -- named graphs -------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(range(n))


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycles need at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


# -- text formats -------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Vertices are ``0..n-1`` unless a ``"v id id ..."`` line lists them
    explicitly (used for graphs whose ids are not contiguous).
    """
    lines = _content_lines(text)
    if not lines:
        raise PreconditionError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise PreconditionError(f"bad header line {lines[0]!r}") from None
    rest = lines[1:]
    vertices: list[int] = list(range(n))
    if rest and rest[0].split()[0] == "v":
        vertices = [int(t) for t in rest[0].split()[1:]]
        rest = rest[1:]
        if len(vertices) != n:
            raise PreconditionError("vertex line does not list n ids")
    if len(rest) != m:
        raise PreconditionError(f"expected {m} edge lines, found {len(rest)}")
    edges = []
    allowed = set(vertices)
    for line in rest:
        parts = line.split()
        if len(parts) != 2:
            raise PreconditionError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u not in allowed or v not in allowed:
            raise PreconditionError(f"edge {u} {v} uses an undeclared vertex")
        edges.append((u, v))
    g = Graph(vertices, edges)
    if g.m != m:
        raise PreconditionError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    if g.vertices != list(range(g.n)):
        lines.append("v " + " ".join(map(str, g.vertices)))
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> list[Operation]:
    ops: list[Operation] = []
    for line in _content_lines(text):
        parts = line.split()
        if parts[0] == "c" and len(parts) == 3:
            ops.append(Contract(int(parts[1]), int(parts[2])))
        elif parts[0] == "d" and len(parts) == 2:
            ops.append(Delete(int(parts[1])))
        else:
            raise PreconditionError(f"bad witness line {line!r}")
    return ops


def format_witness(ops: Iterable[Operation]) -> str:
    return "".join(f"{op}\n" for op in ops)

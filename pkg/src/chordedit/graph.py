"""Simple undirected graphs, editing sets and the primitive queries on them."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class MalformedEditError(ValueError):
    """An editing set that does not fit the graph it is applied to."""


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of the pair ``uv``."""
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with integer vertex ids.

    Adjacency is stored as a mapping ``vertex -> frozenset(neighbours)``.
    """

    __slots__ = ("_adj", "_m", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._m = sum(len(nb) for nb in self._adj.values()) // 2
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]]) -> "Graph":
        """Build from a symmetric adjacency mapping without re-validation."""
        g = cls.__new__(cls)
        g._adj = {v: frozenset(nb) for v, nb in adj.items()}
        g._m = sum(len(nb) for nb in g._adj.values()) // 2
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def sorted_vertices(self) -> list[int]:
        return sorted(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def set_neighborhood(self, xs: Iterable[int]) -> frozenset[int]:
        """Open neighbourhood N(X) of a vertex set."""
        xs = set(xs)
        out: set[int] = set()
        for v in xs:
            out |= self._adj[v]
        return frozenset(out - xs)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def edges(self) -> set[Edge]:
        return {(u, v) for u, nb in self._adj.items() for v in nb if u < v}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges())

    def non_edges(self) -> list[Edge]:
        vs = sorted(self._adj)
        return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if v not in self._adj[u]]

    def is_clique(self, xs: Iterable[int]) -> bool:
        xs = list(xs)
        for i, u in enumerate(xs):
            nb = self._adj[u]
            for v in xs[i + 1:]:
                if v not in nb:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # derived graphs -------------------------------------------------------

    def remove_vertices(self, xs: Iterable[int]) -> "Graph":
        xs = frozenset(xs)
        if not xs:
            return self
        return Graph.from_adjacency({v: nb - xs for v, nb in self._adj.items() if v not in xs})

    def with_edges(self, removed: Iterable[Edge] = (), added: Iterable[Edge] = ()) -> "Graph":
        adj = {v: set(nb) for v, nb in self._adj.items()}
        for u, v in removed:
            adj[u].discard(v)
            adj[v].discard(u)
        for u, v in added:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph.from_adjacency(adj)


@dataclass(frozen=True, order=False)
class SizeTriple:
    """Counts of vertex deletions, edge deletions and edge additions.

    ``<=`` is the componentwise partial order; ``<`` additionally needs one
    strict coordinate.
    """

    a1: int = 0
    a2: int = 0
    a3: int = 0

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @property
    def total(self) -> int:
        return self.a1 + self.a2 + self.a3

    def __le__(self, other: "SizeTriple") -> bool:
        return self.a1 <= other.a1 and self.a2 <= other.a2 and self.a3 <= other.a3

    def __lt__(self, other: "SizeTriple") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "SizeTriple") -> bool:
        return other <= self

    def __gt__(self, other: "SizeTriple") -> bool:
        return other < self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


@dataclass(frozen=True)
class EditingSet:
    """A triple (V-, E-, E+) of deleted vertices, deleted edges and added edges."""

    vertices: frozenset[int] = field(default_factory=frozenset)
    deleted: frozenset[Edge] = field(default_factory=frozenset)
    added: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "deleted", frozenset(edge(*e) for e in self.deleted))
        object.__setattr__(self, "added", frozenset(edge(*e) for e in self.added))

    @property
    def size(self) -> SizeTriple:
        return size_of(self)

    def is_empty(self) -> bool:
        return not (self.vertices or self.deleted or self.added)

    def validate(self, g: Graph) -> None:
        """Raise :class:`MalformedEditError` if this set does not fit ``g``."""
        for v in self.vertices:
            if v not in g:
                raise MalformedEditError(f"deleted vertex {v} is not in the graph")
        for u, v in self.deleted:
            if not g.has_edge(u, v):
                raise MalformedEditError(f"deleted pair {u}-{v} is not an edge")
        for u, v in self.added:
            if u not in g or v not in g:
                raise MalformedEditError(f"added pair {u}-{v} has an endpoint outside the graph")
            if g.has_edge(u, v):
                raise MalformedEditError(f"added pair {u}-{v} is already an edge")
        both = self.deleted & self.added
        if both:
            raise MalformedEditError(f"pairs both deleted and added: {sorted(both)}")


def size_of(e: EditingSet) -> SizeTriple:
    return SizeTriple(len(e.vertices), len(e.deleted), len(e.added))


def apply_editing(g: Graph, e: EditingSet) -> Graph:
    """Delete ``e.vertices``, then ``e.deleted``, then add ``e.added``.

    Edges of E-/E+ with a deleted endpoint are dropped after a warning.
    """
    e.validate(g)
    gone = e.vertices
    removed = [p for p in e.deleted if p[0] not in gone and p[1] not in gone]
    added = [p for p in e.added if p[0] not in gone and p[1] not in gone]
    dropped = len(e.deleted) + len(e.added) - len(removed) - len(added)
    if dropped:
        logger.warning("dropping %d edited pairs incident to deleted vertices", dropped)
    return g.remove_vertices(gone).with_edges(removed, added)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    s = frozenset(s)
    missing = s - g.vertices
    if missing:
        raise ValueError(f"vertices not in graph: {sorted(missing)}")
    adj = g.adjacency
    return Graph.from_adjacency({v: adj[v] & s for v in s})


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex id."""
    seen: set[int] = set()
    comps = []
    adj = g.adjacency
    for s in sorted(adj):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def component_of(g: Graph, v: int, blocked: Iterable[int] = ()) -> frozenset[int]:
    """Vertices reachable from ``v`` without entering ``blocked``."""
    blocked = set(blocked)
    adj = g.adjacency
    comp = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in comp and w not in blocked:
                comp.add(w)
                queue.append(w)
    return frozenset(comp)


def editing_touches(e: EditingSet, x: Iterable[int]) -> bool:
    x = set(x)
    if e.vertices & x:
        return True
    return any(u in x or v in x for u, v in e.deleted | e.added)


def editing_between(before: Graph, after: Graph) -> EditingSet:
    """The editing set turning ``before`` into ``after`` (``after`` has a subset of the vertices)."""
    surv = after.vertices
    gone = before.vertices - surv
    old = {p for p in before.edges() if p[0] in surv and p[1] in surv}
    new = after.edges()
    return EditingSet(gone, old - new, new - old)

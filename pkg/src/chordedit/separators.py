"""Mixed vertex/edge separators in chordal graphs.

A mixed (x, y)-separator is a pair (V_S, E_S) whose joint deletion leaves x
and y in different components. :func:`find_mixed_separator` runs the
bag-by-bag partition search over a clique tree; the nondeterministic guesses
are replaced by backtracking in ascending id order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .chordality import CliqueTree, bag_path, clique_tree, is_chordal
from .graph import Edge, Graph, connected_components, edge, induced_subgraph


@dataclass(frozen=True)
class MixedSeparator:
    vertices: frozenset[int] = field(default_factory=frozenset)
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(edge(*e) for e in self.edges))

    @property
    def size(self) -> tuple[int, int]:
        return (len(self.vertices), len(self.edges))


def separates(f: Graph, xs: Iterable[int], ys: Iterable[int], sep: MixedSeparator) -> bool:
    """True iff no vertex of ``xs`` reaches ``ys`` in f - V_S - E_S."""
    xs = set(xs) - sep.vertices
    ys = set(ys)
    if ys & sep.vertices:
        ys -= sep.vertices
    if not xs or not ys:
        return True
    adj = f.adjacency
    cut = sep.edges
    gone = sep.vertices
    seen = set(xs)
    queue = deque(xs)
    while queue:
        u = queue.popleft()
        if u in ys:
            return False
        for w in adj[u]:
            if w in seen or w in gone:
                continue
            if (u, w) in cut or (w, u) in cut:
                continue
            seen.add(w)
            queue.append(w)
    return True


class _PartitionSearch:
    """Backtracking over (X, Y, Z) partitions of the bags, one bag at a time.

    X collects vertices on the x side, Y on the y side, Z deleted vertices.
    The cut weight is the total weight of edges between X and Y.
    """

    def __init__(self, f: Graph, tree: CliqueTree, xs, ys, a: int, b: int,
                 weight: Optional[Callable[[int, int], int]] = None):
        self.adj = f.adjacency
        self.f = f
        self.tree = tree
        self.xs = frozenset(xs)
        self.ys = frozenset(ys)
        self.a = a
        self.b = b
        self.weight = weight or (lambda u, v: 1)
        self.X: set[int] = set()
        self.Y: set[int] = set()
        self.Z: set[int] = set()
        self.cut = 0
        self.explored = 0

    def run(self, starts: Iterable[int]) -> Optional[MixedSeparator]:
        for s in starts:
            found = self._grow((s,), frozenset())
            if found is not None:
                return found
        return None

    def _grow(self, queue: tuple[int, ...], processed: frozenset[int]) -> Optional[MixedSeparator]:
        if not queue:
            return self._finish()
        k = queue[0]
        assigned = self.X | self.Y | self.Z
        free = [v for v in sorted(self.tree.bags[k]) if v not in assigned]
        if len(free) > self.a - len(self.Z) + self.b - self.cut + 1:
            return None
        return self._assign(k, free, 0, queue, processed)

    def _assign(self, k, free, i, queue, processed) -> Optional[MixedSeparator]:
        self.explored += 1
        if i == len(free):
            done = processed | {k}
            rest = queue[1:]
            pending = set(rest)
            grown = []
            for j in sorted({nb for p in done for nb in self.tree.tree[p]}):
                if j in done or j in pending:
                    continue
                bag = self.tree.bags[j]
                if bag & self.X and bag & self.Y:
                    grown.append(j)
            return self._grow(rest + tuple(grown), done)
        v = free[i]
        nb = self.adj[v]
        # side X
        if v not in self.ys:
            delta = sum(self.weight(v, u) for u in nb if u in self.Y)
            if self.cut + delta <= self.b:
                self.X.add(v)
                self.cut += delta
                found = self._assign(k, free, i + 1, queue, processed)
                self.cut -= delta
                self.X.discard(v)
                if found is not None:
                    return found
        # side Y
        if v not in self.xs:
            delta = sum(self.weight(v, u) for u in nb if u in self.X)
            if self.cut + delta <= self.b:
                self.Y.add(v)
                self.cut += delta
                found = self._assign(k, free, i + 1, queue, processed)
                self.cut -= delta
                self.Y.discard(v)
                if found is not None:
                    return found
        # deleted
        if v not in self.xs and v not in self.ys and len(self.Z) < self.a:
            self.Z.add(v)
            found = self._assign(k, free, i + 1, queue, processed)
            self.Z.discard(v)
            if found is not None:
                return found
        return None

    def _finish(self) -> Optional[MixedSeparator]:
        cut_edges = {edge(u, w) for u in self.X for w in self.adj[u] if w in self.Y}
        sep = MixedSeparator(frozenset(self.Z), frozenset(cut_edges))
        if separates(self.f, self.xs, self.ys, sep):
            return sep
        return None


def _check_terminals(f: Graph, xs: frozenset[int], ys: frozenset[int]) -> None:
    if not xs or not ys:
        raise ValueError("terminal sets must be nonempty")
    for v in xs | ys:
        if v not in f:
            raise ValueError(f"terminal {v} is not a vertex")
    if xs & ys:
        raise ValueError("terminal sets intersect")
    if f.set_neighborhood(xs) & ys:
        raise ValueError("terminals are adjacent")


def find_mixed_separator(f: Graph, x: int, y: int, a: int, b: int,
                         tree: Optional[CliqueTree] = None) -> Optional[MixedSeparator]:
    """Mixed (x, y)-separator of size at most (a, b) in chordal ``f``, or None.

    Pass ``tree`` to reuse a clique tree of ``f``; chordality is then assumed.
    """
    _check_terminals(f, frozenset([x]), frozenset([y]))
    if a < 0 or b < 0:
        return None
    if tree is None:
        tree = clique_tree(f)
    return _weighted_search(f, tree, x, y, a, b, None)


def _weighted_search(f, tree, x, y, a, b, weight) -> Optional[MixedSeparator]:
    path = bag_path(tree, x, y)
    if path is None:
        return MixedSeparator()
    # a minimum vertex separator of a chordal graph is a smallest S_l on the bag path
    smallest = min(path.separators, key=len)
    if len(smallest) <= a:
        return MixedSeparator(smallest, frozenset())
    if b == 0:
        return None
    return _PartitionSearch(f, tree, {x}, {y}, a, b, weight).run(path.bags)


def contract_terminals(f: Graph, xs: Iterable[int], ys: Iterable[int]):
    """Shrink ``xs`` and ``ys`` to their smallest members.

    Returns the contracted graph, the two representatives and the edge
    multiplicities of the new edges (the number of original edges each one
    stands for).
    """
    xs, ys = frozenset(xs), frozenset(ys)
    xr, yr = min(xs), min(ys)
    adj: dict[int, set[int]] = {}
    both = xs | ys
    for v in f.vertices - both:
        adj[v] = set(f.neighbors(v) - both)
    weights: dict[Edge, int] = {}
    for rep, group in ((xr, xs), (yr, ys)):
        adj[rep] = set()
        for w in f.set_neighborhood(group):
            adj[rep].add(w)
            adj[w].add(rep)
            weights[edge(rep, w)] = len(f.neighbors(w) & group)
    return Graph.from_adjacency(adj), xr, yr, weights


def _expand(f: Graph, sep: MixedSeparator, reps: dict[int, frozenset[int]]) -> MixedSeparator:
    out = set()
    for u, v in sep.edges:
        if u in reps or v in reps:
            rep, w = (u, v) if u in reps else (v, u)
            out.update(edge(s, w) for s in reps[rep] if f.has_edge(s, w))
        else:
            out.add((u, v))
    return MixedSeparator(sep.vertices, frozenset(out))


def find_set_separator(f: Graph, xs: Iterable[int], ys: Iterable[int], a: int, b: int,
                       tree: Optional[CliqueTree] = None) -> Optional[MixedSeparator]:
    """Mixed (xs, ys)-separator of size at most (a, b) avoiding the terminals.

    Each terminal set is contracted to one vertex, and contracted edges carry
    their multiplicity as a weight so that edge counts stay exact. If a
    contraction is not chordal (possible only for a disconnected terminal
    set) a generic bounded branching over shortest xs-ys paths is used.
    """
    xs, ys = frozenset(xs), frozenset(ys)
    _check_terminals(f, xs, ys)
    if a < 0 or b < 0:
        return None
    if len(xs) == 1 and len(ys) == 1:
        return find_mixed_separator(f, min(xs), min(ys), a, b, tree)
    fc, xr, yr, weights = contract_terminals(f, xs, ys)
    if is_chordal(fc):
        sep = _weighted_search(fc, clique_tree(fc), xr, yr, a, b, lambda u, v: weights.get(edge(u, v), 1))
        if sep is None:
            return None
        return _expand(f, sep, {xr: xs, yr: ys})
    return _multi_source_search(f, xs, ys, a, b)


def _multi_source_search(f, xs, ys, a, b) -> Optional[MixedSeparator]:
    """Bounded branching on a shortest xs-ys path: some inner vertex or edge of it must go.

    Valid in any graph; used only when a terminal set is disconnected, so
    the contraction may fail to be chordal.
    """
    adj = f.adjacency
    seen: set = set()

    def shortest(vs, es):
        parent = {v: None for v in sorted(xs)}
        queue = deque(parent)
        while queue:
            u = queue.popleft()
            if u in ys:
                out = [u]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return out
            for w in sorted(adj[u]):
                if w in parent or w in vs or edge(u, w) in es:
                    continue
                parent[w] = u
                queue.append(w)
        return None

    def rec(vs, es):
        key = (vs, es)
        if key in seen:
            return None
        seen.add(key)
        p = shortest(vs, es)
        if p is None:
            return MixedSeparator(vs, es)
        if len(vs) < a:
            for v in p[1:-1]:
                found = rec(vs | {v}, es)
                if found is not None:
                    return found
        if len(es) < b:
            for u, w in zip(p, p[1:]):
                found = rec(vs, es | {edge(u, w)})
                if found is not None:
                    return found
        return None

    return rec(frozenset(), frozenset())


def minimalize(f: Graph, xs: Iterable[int], ys: Iterable[int], sep: MixedSeparator) -> MixedSeparator:
    """Greedily drop vertices, then edges, while the pair still separates."""
    xs, ys = frozenset(xs), frozenset(ys)
    verts = set(sep.vertices)
    edges = set(sep.edges)
    for v in sorted(sep.vertices):
        trial = MixedSeparator(verts - {v}, edges)
        if separates(f, xs, ys, trial):
            verts.discard(v)
    for e in sorted(sep.edges):
        trial = MixedSeparator(verts, edges - {e})
        if separates(f, xs, ys, trial):
            edges.discard(e)
    return MixedSeparator(verts, edges)


def is_inclusion_minimal(f: Graph, x, y, s: MixedSeparator) -> bool:
    xs = frozenset([x]) if isinstance(x, int) else frozenset(x)
    ys = frozenset([y]) if isinstance(y, int) else frozenset(y)
    if not separates(f, xs, ys, s):
        raise ValueError("not a separator")
    for v in s.vertices:
        if separates(f, xs, ys, MixedSeparator(s.vertices - {v}, s.edges)):
            return False
    for e in s.edges:
        if separates(f, xs, ys, MixedSeparator(s.vertices, s.edges - {e})):
            return False
    return True


def separator_profile(f: Graph, xs: Iterable[int], ys: Iterable[int], k1: int, k2: int
                      ) -> list[tuple[int, Optional[int], Optional[MixedSeparator]]]:
    """For a = 0..k1 the least b <= k2 admitting a separator of size (a, b), with one witness."""
    xs, ys = frozenset(xs), frozenset(ys)
    _check_terminals(f, xs, ys)
    tree = clique_tree(f) if len(xs) == 1 and len(ys) == 1 else None
    out = []
    upper = k2
    for a in range(k1 + 1):
        hit = None
        for b in range(upper + 1):
            sep = find_set_separator(f, xs, ys, a, b, tree)
            if sep is not None:
                hit = (b, sep)
                break
        if hit is None:
            out.append((a, None, None))
        else:
            out.append((a, hit[0], hit[1]))
            upper = hit[0]
    return out


def min_b_profile(f: Graph, xs: Iterable[int], ys: Iterable[int], k1: int, k2: int
                  ) -> list[tuple[int, Optional[int]]]:
    """Pairs (a, b_min(a)); ``None`` marks that no separator of size (a, k2) exists."""
    return [(a, b) for a, b, _ in separator_profile(f, xs, ys, k1, k2)]


def residue_components(f: Graph, sep: MixedSeparator) -> list[frozenset[int]]:
    """Components of f - V_S - E_S."""
    keep = f.vertices - sep.vertices
    cut = [e for e in sep.edges if e[0] in keep and e[1] in keep]
    g = induced_subgraph(f, keep).with_edges(removed=cut)
    return connected_components(g)

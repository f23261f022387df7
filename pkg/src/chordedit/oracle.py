"""Exhaustive reference implementations for desk-scale cross-checks.

Everything here is deliberately naive: plain enumeration over subsets in a
fixed order (by size, then lexicographic).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .chordality import is_chordal
from .graph import EditingSet, Graph, SizeTriple, apply_editing
from .holes import Hole
from .separators import MixedSeparator, separates


class OracleCapError(ValueError):
    """Instance or budget exceeds the oracle caps."""


@dataclass(frozen=True)
class OracleBudget:
    k1: int = 0
    k2: int = 0
    k3: int = 0
    max_k: int = 4
    max_n: int = 10

    @property
    def total(self) -> int:
        return self.k1 + self.k2 + self.k3

    def check(self, g: Graph) -> None:
        if min(self.k1, self.k2, self.k3) < 0:
            raise OracleCapError("negative budget")
        if self.total > self.max_k:
            raise OracleCapError(f"budget {self.total} exceeds cap {self.max_k}")
        if g.n > self.max_n:
            raise OracleCapError(f"{g.n} vertices exceeds cap {self.max_n}")


def _subsets(items, limit) -> Iterator[tuple]:
    for r in range(min(limit, len(items)) + 1):
        yield from combinations(items, r)


def brute_force_edit(g: Graph, budget: OracleBudget) -> Optional[EditingSet]:
    """First chordal editing set of size at most the budget, or None.

    Candidates are ordered by total size, then by the size triple, then
    lexicographically within each of V-, E-, E+.
    """
    budget.check(g)
    verts = g.sorted_vertices()
    for total in range(budget.total + 1):
        for s1 in range(min(total, budget.k1) + 1):
            for s2 in range(min(total - s1, budget.k2) + 1):
                s3 = total - s1 - s2
                if s3 > budget.k3:
                    continue
                for vminus in combinations(verts, s1):
                    h = g.remove_vertices(vminus)
                    edges = h.sorted_edges()
                    non_edges = h.non_edges()
                    if s2 > len(edges) or s3 > len(non_edges):
                        continue
                    for eminus in combinations(edges, s2):
                        for eplus in combinations(non_edges, s3):
                            e = EditingSet(frozenset(vminus), frozenset(eminus), frozenset(eplus))
                            if is_chordal(apply_editing(g, e)):
                                return e
    return None


def brute_force_mixed_separator(f: Graph, x: int, y: int, a: int, b: int,
                                max_n: int = 12, max_k: int = 4) -> bool:
    """True iff some (V_S, E_S) with |V_S| <= a, |E_S| <= b disconnects x from y."""
    if f.n > max_n or a + b > max_k:
        raise OracleCapError("mixed separator oracle caps exceeded")
    if f.has_edge(x, y):
        raise ValueError("terminals are adjacent")
    others = [v for v in f.sorted_vertices() if v not in (x, y)]
    for vs in _subsets(others, a):
        h = f.remove_vertices(vs)
        for es in _subsets(h.sorted_edges(), b):
            if separates(f, {x}, {y}, MixedSeparator(frozenset(vs), frozenset(es))):
                return True
    return False


def min_cut_table(f: Graph, x: int, y: int, a_max: int) -> list[int]:
    """Entry ``s`` is the least number of edges that, together with some ``s``
    deleted vertices, separate x from y; found by enumerating every vertex set
    V_S and every side C containing x but not y.
    """
    others = [v for v in f.sorted_vertices() if v not in (x, y)]
    best = [10**9] * (a_max + 1)
    adj = f.adjacency
    for vs in _subsets(others, a_max):
        rest = [v for v in others if v not in vs]
        s = len(vs)
        gone = set(vs)
        for mask in range(1 << len(rest)):
            side = {x} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
            cut = 0
            for u in side:
                for w in adj[u]:
                    if w not in side and w not in gone:
                        cut += 1
            if cut < best[s]:
                best[s] = cut
    for s in range(1, a_max + 1):
        best[s] = min(best[s], best[s - 1])
    return best


def enumerate_induced_cycles(g: Graph, max_len: Optional[int] = None) -> list[Hole]:
    """All holes of length 4..max_len, each in canonical form, sorted."""
    if max_len is None:
        max_len = g.n
    adj = g.adjacency
    found: set[tuple[int, ...]] = set()
    for start in g.sorted_vertices():
        # paths whose smallest vertex is ``start``
        stack = [(start,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in adj[last]:
                if w <= start or w in path:
                    continue
                # w may only touch the path at ``last`` and, when closing, at ``start``
                touches = [u for u in path[:-1] if u in adj[w]]
                if touches and touches != [start]:
                    continue
                new = path + (w,)
                if touches == [start]:
                    if len(new) >= 4:
                        found.add(Hole(new).canonical().vertices)
                    continue
                if len(new) < max_len:
                    stack.append(new)
    return [Hole(c) for c in sorted(found)]


def enumerate_induced_paths(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    """All induced s-t paths."""
    adj = g.adjacency
    out = []
    stack = [(s,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == t:
            out.append(path)
            continue
        for w in adj[last]:
            if w in path:
                continue
            if any(u in adj[w] for u in path[:-1]):
                continue
            stack.append(path + (w,))
    return sorted(out)


def graph_atlas(max_n: int, connected_only: bool = False) -> list[Graph]:
    """Every graph on at most ``max_n`` (<= 7) vertices up to isomorphism."""
    import networkx as nx

    if max_n > 7:
        raise OracleCapError("the atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 0 or h.number_of_nodes() > max_n:
            continue
        if connected_only and not nx.is_connected(h):
            continue
        out.append(Graph(h.nodes(), h.edges()))
    return out


def oracle_size_ok(e: EditingSet, budget) -> bool:
    return e.size <= SizeTriple(*budget)

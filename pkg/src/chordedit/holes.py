"""Shortest holes and the unit edits that destroy a given hole."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .chordality import _bfs_path, is_chordal, simplicial_vertices
from .graph import Edge, Graph, SizeTriple, edge


@dataclass(frozen=True)
class Hole:
    """Induced cycle given as a cyclic vertex sequence."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def chords(self) -> list[Edge]:
        """All non-consecutive pairs of hole vertices."""
        vs = self.vertices
        n = len(vs)
        out = []
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                out.append(edge(vs[i], vs[j]))
        return sorted(out)

    def distance(self, i: int, j: int) -> int:
        """Distance on the cycle between positions ``i`` and ``j``."""
        d = abs(i - j) % len(self.vertices)
        return min(d, len(self.vertices) - d)

    def canonical(self) -> "Hole":
        """Lexicographically smallest rotation/reflection."""
        vs = self.vertices
        n = len(vs)
        best = None
        for seq in (vs, vs[::-1]):
            for r in range(n):
                cand = seq[r:] + seq[:r]
                if best is None or cand < best:
                    best = cand
        return Hole(best)


def verify_hole(g: Graph, h: Hole) -> bool:
    vs = h.vertices
    n = len(vs)
    if n < 4 or len(set(vs)) != n:
        return False
    if any(v not in g for v in vs):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if g.has_edge(vs[i], vs[j]) != consecutive:
                return False
    return True


def _bfs_dist(adj, source: int, blocked: frozenset[int]) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if w not in dist and w not in blocked:
                dist[w] = du
                queue.append(w)
    return dist


def shortest_hole(g: Graph) -> Optional[Hole]:
    """A shortest hole of ``g`` or None if ``g`` is chordal.

    For every triple v1 ~ v2 ~ v3 with v1 !~ v3 the shortest v1-v3 path in
    G - (N[v2] - {v1, v3}) closes a hole through v2. The lexicographically
    first triple of minimum length wins; the path is the BFS path that
    explores neighbours in ascending id order.
    """
    if is_chordal(g):
        return None
    adj = g.adjacency
    simp = simplicial_vertices(g)
    best_len = None
    best = None
    for v1 in sorted(adj):
        if v1 in simp:
            continue
        for v2 in sorted(adj[v1]):
            if v2 in simp:
                continue
            closed2 = adj[v2] | {v2}
            targets = [v3 for v3 in sorted(adj[v2]) if v3 != v1 and v3 not in adj[v1]]
            if not targets:
                continue
            # one BFS per (v1, v2): paths may not touch N[v2] except at the ends
            dist = _bfs_dist(adj, v1, closed2 - {v1})
            for v3 in targets:
                reach = [dist[u] for u in adj[v3] if u in dist and u not in closed2]
                if not reach:
                    continue
                length = min(reach) + 3
                if best_len is None or length < best_len:
                    best_len, best = length, (v1, v2, v3)
            if best_len == 4:
                break
        if best_len == 4:
            break
    if best is None:  # pragma: no cover - is_chordal said otherwise
        raise AssertionError("non-chordal graph without a hole")
    v1, v2, v3 = best
    path = _bfs_path(g, v1, v3, (adj[v2] | {v2}) - {v1, v3})
    return Hole(tuple(path) + (v2,))


@dataclass(frozen=True)
class UnitEdit:
    """One vertex deletion, edge deletion or edge addition."""

    kind: str  # "vertex" | "delete" | "add"
    target: object

    def key(self):
        return (self.kind, self.target)


def hole_fix_candidates(g: Graph, h: Hole, m: Iterable[int], budget: SizeTriple) -> list[UnitEdit]:
    """Unit edits that destroy ``h``: vertex deletions outside ``m``, hole-edge deletions, chord additions."""
    m = set(m)
    out: list[UnitEdit] = []
    if budget.a1 > 0:
        out += [UnitEdit("vertex", v) for v in sorted(h.vertex_set - m)]
    if budget.a2 > 0:
        out += [UnitEdit("delete", e) for e in sorted(h.edges())]
    if budget.a3 > 0:
        out += [UnitEdit("add", e) for e in h.chords()]
    return out

"""Chordal recognition, clique trees and simplicial structure."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, induced_subgraph


class NotChordalError(ValueError):
    """Raised where a chordal graph is required; carries a hole certificate."""

    def __init__(self, message: str, hole=None):
        super().__init__(message)
        self.hole = hole


def mcs_order(g: Graph) -> list[int]:
    """Elimination ordering from maximum cardinality search.

    The MCS visit order is reversed, so the result is a perfect elimination
    ordering exactly when ``g`` is chordal. Ties go to the smallest id.
    """
    adj = g.adjacency
    weight = dict.fromkeys(adj, 0)
    heap = [(0, v) for v in sorted(adj)]
    visited: set[int] = set()
    visit = []
    while heap:
        w, v = heapq.heappop(heap)
        if v in visited or -w != weight[v]:
            continue
        visited.add(v)
        visit.append(v)
        for u in adj[v]:
            if u not in visited:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    visit.reverse()
    return visit


def _peo_violation(g: Graph, order: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First (v, u, w) with u, w later non-adjacent neighbours of v, or None."""
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        nb = adj[parent]
        for u in later:
            if u != parent and u not in nb:
                return v, parent, u
    return None


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != g.sorted_vertices():
        return False
    return _peo_violation(g, order) is None


def is_chordal(g: Graph) -> bool:
    return _peo_violation(g, mcs_order(g)) is None


def find_hole(g: Graph):
    """A hole of ``g`` extracted from the PEO check, or None if ``g`` is chordal."""
    bad = _peo_violation(g, mcs_order(g))
    if bad is None:
        return None
    from .holes import Hole, shortest_hole

    v, u, w = bad
    blocked = g.closed_neighborhood(v) - {u, w}
    path = _bfs_path(g, u, w, blocked)
    if path is not None:
        return Hole(tuple(path) + (v,))
    return shortest_hole(g)


def _bfs_path(g: Graph, s: int, t: int, blocked: Iterable[int] = ()) -> Optional[list[int]]:
    blocked = set(blocked)
    adj = g.adjacency
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in sorted(adj[u]):
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    return path


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques of a chordal graph joined into a tree (a forest if disconnected).

    ``bags[i]`` is a maximal clique; ``tree[i]`` lists the bags adjacent to bag
    ``i``; ``membership[v]`` lists the bags containing ``v`` in ascending order.
    """

    bags: tuple[frozenset[int], ...]
    tree: tuple[tuple[int, ...], ...]
    membership: dict

    def bags_of(self, v: int) -> tuple[int, ...]:
        return self.membership.get(v, ())

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.tree) for j in nb if i < j]

    def subtree(self, start: int, removed: Iterable[int] = ()) -> set[int]:
        """Bags reachable from ``start`` in the tree with ``removed`` bags deleted."""
        removed = set(removed)
        seen = {start}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in self.tree[i]:
                if j not in seen and j not in removed:
                    seen.add(j)
                    queue.append(j)
        return seen


@dataclass(frozen=True)
class BagPath:
    bags: tuple[int, ...]
    separators: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.bags)


def maximal_cliques_chordal(g: Graph, order: Optional[Sequence[int]] = None) -> list[frozenset[int]]:
    """Maximal cliques of a chordal graph from a perfect elimination ordering."""
    if order is None:
        order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency
    candidates = []
    for v in order:
        candidates.append(frozenset([v, *(u for u in adj[v] if pos[u] > pos[v])]))
    # C(v) is non-maximal iff it sits inside the candidate of some earlier vertex;
    # checking against the earlier vertices adjacent to v suffices.
    maximal = []
    for v, c in zip(order, candidates):
        earlier = [u for u in adj[v] if pos[u] < pos[v]]
        if any(c <= candidates[pos[u]] for u in earlier):
            continue
        maximal.append(c)
    return maximal


def clique_tree(g: Graph) -> CliqueTree:
    """Clique tree (forest for disconnected input) of a chordal graph.

    Bags are sorted by their sorted vertex tuples; tree edges form a
    maximum-weight spanning forest on intersection sizes, ties broken by the
    smaller bag index pair.
    """
    order = mcs_order(g)
    bad = _peo_violation(g, order)
    if bad is not None:
        raise NotChordalError("graph is not chordal", find_hole(g))
    bags = sorted(maximal_cliques_chordal(g, order), key=lambda b: tuple(sorted(b)))
    membership: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, b in enumerate(bags):
        for v in b:
            membership[v].append(i)
    weights: dict[tuple[int, int], int] = {}
    for v, idx in membership.items():
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                key = (idx[x], idx[y])
                weights[key] = weights.get(key, 0) + 1
    parent = list(range(len(bags)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    tree: list[list[int]] = [[] for _ in bags]
    for (i, j), _w in sorted(weights.items(), key=lambda kv: (-kv[1], kv[0])):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            tree[i].append(j)
            tree[j].append(i)
    return CliqueTree(
        bags=tuple(bags),
        tree=tuple(tuple(sorted(nb)) for nb in tree),
        membership={v: tuple(idx) for v, idx in membership.items()},
    )


def bag_path(t: CliqueTree, u: int, v: int) -> Optional[BagPath]:
    """Unique bag path joining the subtrees of ``u`` and ``v``.

    Returns None when the two vertices lie in different components.
    """
    src = set(t.bags_of(u))
    dst = set(t.bags_of(v))
    if src & dst:
        raise ValueError(f"vertices {u} and {v} are adjacent")
    parent: dict[int, Optional[int]] = {i: None for i in sorted(src)}
    queue = deque(sorted(src))
    hit = None
    while queue:
        i = queue.popleft()
        if i in dst:
            hit = i
            break
        for j in t.tree[i]:
            if j not in parent:
                parent[j] = i
                queue.append(j)
    if hit is None:
        return None
    path = [hit]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    seps = tuple(t.bags[a] & t.bags[b] for a, b in zip(path, path[1:]))
    return BagPath(tuple(path), seps)


def tight_bag_path(t: CliqueTree, u: int, v: int) -> tuple[CliqueTree, Optional[BagPath]]:
    """A clique tree (possibly re-hung) whose u-v bag path has no nested consecutive separators.

    If S_l contains S_{l+1}, the edge K_{l+1}K_{l+2} is replaced by K_lK_{l+2};
    if S_l is inside S_{l+1}, the edge K_lK_{l+1} is. The new edge carries the
    same separator, so the result is again a maximum-weight tree on the
    bags, hence a clique tree, and the path loses one bag. On the final path
    every separator is a minimal u-v separator.
    """
    tree = [set(nb) for nb in t.tree]
    changed = False
    while True:
        cur = t if not changed else CliqueTree(t.bags, tuple(tuple(sorted(nb)) for nb in tree), t.membership)
        bp = bag_path(cur, u, v)
        if bp is None:
            return cur, None
        seps = bp.separators
        k = bp.bags
        for ell in range(len(seps) - 1):
            if seps[ell] >= seps[ell + 1]:
                drop, add = (k[ell + 1], k[ell + 2]), (k[ell], k[ell + 2])
                break
            if seps[ell] <= seps[ell + 1]:
                drop, add = (k[ell], k[ell + 1]), (k[ell], k[ell + 2])
                break
        else:
            return cur, bp
        tree[drop[0]].discard(drop[1])
        tree[drop[1]].discard(drop[0])
        tree[add[0]].add(add[1])
        tree[add[1]].add(add[0])
        changed = True


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices if g.is_clique(g.neighbors(v)))


def is_simplicial_set(g: Graph, x: Iterable[int]) -> bool:
    """True iff N[X] induces a chordal graph and N(X) is a clique."""
    x = frozenset(x)
    nb = g.set_neighborhood(x)
    if not g.is_clique(nb):
        return False
    return is_chordal(induced_subgraph(g, x | nb))

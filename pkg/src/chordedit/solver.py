"""Iterative compression and the bounded search tree for chordal editing."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .chordality import is_chordal, simplicial_vertices
from .graph import EditingSet, Graph, SizeTriple, editing_between, edge, induced_subgraph
from .holes import Hole, UnitEdit, hole_fix_candidates, shortest_hole
from .segments import (
    HoleContext,
    Segment,
    build_hole_context,
    build_path_context,
    classify_junctions,
    decompose_segments,
    segment_bound_guard,
)
from .separators import minimalize, separator_profile

logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    check_invariants: bool = False
    threads: int = 1
    guard_constructive: bool = True
    reuse_previous: bool = True


@dataclass
class SolverStats:
    nodes: int = 0
    compress_calls: int = 0
    short_hole_nodes: int = 0
    long_hole_nodes: int = 0
    path_contexts: int = 0
    core_brute_checks: int = 0
    case_children: dict = field(default_factory=lambda: {"case1": 0, "case2": 0, "case3": 0})
    max_children: int = 0
    max_ceiling_ratio: float = 0.0
    max_depth: int = 0

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "compress_calls": self.compress_calls,
            "short_hole_nodes": self.short_hole_nodes,
            "long_hole_nodes": self.long_hole_nodes,
            "path_contexts": self.path_contexts,
            "core_brute_checks": self.core_brute_checks,
            "case_children": dict(self.case_children),
            "max_children": self.max_children,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class CompressionInstance:
    graph: Graph
    budget: SizeTriple
    modulator: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "modulator", frozenset(self.modulator))
        if not self.modulator <= self.graph.vertices:
            raise ValueError("modulator has vertices outside the graph")
        if not is_chordal(self.graph.remove_vertices(self.modulator)):
            raise ValueError("modulator is not a hole cover")


@dataclass(frozen=True)
class SearchNode:
    """One node of the search tree.

    Endpoints of every edited pair join the modulator: an inclusion-minimal
    solution never deletes them, and it keeps G - M chordal after edge edits.
    """

    graph: Graph
    budget: SizeTriple
    modulator: frozenset[int]
    depth: int = 0

    def delete_vertices(self, vs: Iterable[int]) -> "SearchNode":
        vs = frozenset(vs)
        b = self.budget
        return SearchNode(self.graph.remove_vertices(vs), SizeTriple(b.a1 - len(vs), b.a2, b.a3),
                          self.modulator - vs, self.depth + 1)

    def delete_edges(self, es: Iterable) -> "SearchNode":
        es = [edge(*e) for e in es]
        b = self.budget
        touched = {v for e in es for v in e}
        return SearchNode(self.graph.with_edges(removed=es), SizeTriple(b.a1, b.a2 - len(es), b.a3),
                          self.modulator | touched, self.depth + 1)

    def add_edge(self, e) -> "SearchNode":
        b = self.budget
        return SearchNode(self.graph.with_edges(added=[e]), SizeTriple(b.a1, b.a2, b.a3 - 1),
                          self.modulator | set(e), self.depth + 1)

    def apply(self, unit: UnitEdit) -> "SearchNode":
        if unit.kind == "vertex":
            return self.delete_vertices([unit.target])
        if unit.kind == "delete":
            return self.delete_edges([unit.target])
        return self.add_edge(unit.target)

    def separate(self, vertices, edges) -> "SearchNode":
        node = self.delete_vertices(vertices) if vertices else self
        if edges:
            node = node.delete_edges(edges)
        return SearchNode(node.graph, node.budget, node.modulator, self.depth + 1)


def preprocess_simplicial(g: Graph) -> Graph:
    """Remove simplicial vertices until none is left."""
    while True:
        simp = simplicial_vertices(g)
        if not simp:
            return g
        g = g.remove_vertices(simp)


def solve(g: Graph, k1: int, k2: int, k3: int, config: Optional[SolverConfig] = None,
          stats: Optional[SolverStats] = None) -> Optional[EditingSet]:
    """Chordal editing set of ``g`` of size at most (k1, k2, k3), or None.

    Vertices are inserted in ascending id order. After each insertion the
    previous solution is tried first; otherwise every subset of the extended
    modulator candidates is guessed as deleted and the rest is handed to
    :func:`compress` as modulator.
    """
    if min(k1, k2, k3) < 0:
        return None
    config = config or SolverConfig()
    stats = stats if stats is not None else SolverStats()
    order = g.sorted_vertices()
    sol = EditingSet()
    for i, v in enumerate(order):
        prefix = induced_subgraph(g, order[:i + 1])
        if config.reuse_previous and is_chordal(_apply_fresh(prefix, sol)):
            continue
        cands = set(sol.vertices) | {v} | {min(e) for e in sol.deleted | sol.added}
        cands = sorted(cands)
        subsets = [xm for r in range(min(k1, len(cands)) + 1) for xm in combinations(cands, r)]
        found = _first_compression(prefix, subsets, cands, (k1, k2, k3), config, stats)
        if found is None:
            return None
        sol = found
    return sol


def _apply_fresh(g: Graph, e: EditingSet) -> Graph:
    gone = e.vertices
    removed = [p for p in e.deleted if p[0] not in gone and p[1] not in gone]
    added = [p for p in e.added if p[0] not in gone and p[1] not in gone]
    return g.remove_vertices(gone).with_edges(removed, added)


def _try_subset(prefix, xm, cands, budget, config, stats) -> Optional[EditingSet]:
    k1, k2, k3 = budget
    h = prefix.remove_vertices(xm)
    inst = CompressionInstance(h, SizeTriple(k1 - len(xm), k2, k3), frozenset(cands) - set(xm))
    r = compress(inst, config, stats)
    if r is None:
        return None
    return EditingSet(r.vertices | set(xm), r.deleted, r.added)


def _first_compression(prefix, subsets, cands, budget, config, stats) -> Optional[EditingSet]:
    if config.threads <= 1:
        for xm in subsets:
            r = _try_subset(prefix, xm, cands, budget, config, stats)
            if r is not None:
                return r
        return None
    # parallel: evaluate in batches, keep the first success in emission order
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        for start in range(0, len(subsets), config.threads):
            batch = subsets[start:start + config.threads]
            results = list(pool.map(lambda xm: _try_subset(prefix, xm, cands, budget, config,
                                                           SolverStats()), batch))
            for r in results:
                if r is not None:
                    return r
    return None


def compress(inst: CompressionInstance, config: Optional[SolverConfig] = None,
             stats: Optional[SolverStats] = None) -> Optional[EditingSet]:
    """Editing set of size at most the budget whose deletions avoid the modulator, or None."""
    config = config or SolverConfig()
    stats = stats if stats is not None else SolverStats()
    stats.compress_calls += 1
    root = SearchNode(inst.graph, inst.budget, inst.modulator)
    leaf = _search(root, config, stats)
    if leaf is None:
        return None
    return editing_between(inst.graph, leaf.graph)


def _search(node: SearchNode, config: SolverConfig, stats: SolverStats) -> Optional[SearchNode]:
    stats.nodes += 1
    stats.max_depth = max(stats.max_depth, node.depth)
    b = node.budget
    if b.a1 < 0 or b.a2 < 0 or b.a3 < 0:
        return None
    hole = shortest_hole(node.graph)
    if hole is None:
        return node
    k = b.total
    if k == 0:
        return None
    if len(hole) < k + 4:
        stats.short_hole_nodes += 1
        children = [node.apply(u) for u in hole_fix_candidates(node.graph, hole, node.modulator, b)]
    else:
        stats.long_hole_nodes += 1
        children = break_long_hole(node, hole, config, stats)
    stats.max_children = max(stats.max_children, len(children))
    for child in children:
        found = _search(child, config, stats)
        if found is not None:
            return found
    return None


def branch_ceiling(hc: HoleContext, junction_count: int, segment_count: int, budget: SizeTriple) -> int:
    """Upper bound on the children of one long-hole node."""
    d = 2 * budget.total + 4
    near = junction_count * (2 * d + 1)
    return near + (near + 2 * len(hc.modulator)) + segment_count * (budget.a1 + 1)


def break_long_hole(node: SearchNode, hole: Hole, config: Optional[SolverConfig] = None,
                    stats: Optional[SolverStats] = None) -> list[SearchNode]:
    """Children for a hole too long to be fixed by edge additions alone.

    Case 1 deletes a junction or a hole edge incident to the modulator; case 2
    deletes a hole vertex or edge within distance d = 2k + 4 of a junction;
    case 3 cuts a long segment with a minimum mixed separator between its two
    end stretches, one child per vertex-deletion count.
    """
    config = config or SolverConfig()
    stats = stats if stats is not None else SolverStats()
    g, b, m = node.graph, node.budget, node.modulator
    if b.a1 == 0 and b.a2 == 0:
        return []
    check = config.check_invariants
    hc = build_hole_context(g, hole, m, check=check)
    pcs = {}
    junctions = {}
    segments: list[Segment] = []
    junction_vertices: list[int] = []
    for pid, path in enumerate(hc.paths):
        if len(path) > 3:
            pc = build_path_context(hc, path, check=check)
            stats.path_contexts += 1
            if check and len(hc.chordal_part) <= 12:
                stats.core_brute_checks += 1
            js = classify_junctions(pc, g, hc)
            pcs[pid] = pc
            junctions[pid] = js
            idx = [j.index for j in js]
        else:
            idx = [0, len(path) - 1]
        junction_vertices += [path[i] for i in sorted(set(idx))]
        segments += decompose_segments(path, idx, pid)

    if config.guard_constructive:
        verdict = segment_bound_guard(segments, hc, b, pcs, junctions)
        if verdict.kind == "infeasible":
            return []
        if verdict.kind == "forced":
            return [node.delete_vertices([verdict.vertex])] if b.a1 > 0 else []

    hv = hole.vertices
    pos = hc.position
    d = 2 * b.total + 4
    jpos = [pos[v] for v in junction_vertices]

    def near_junction(v):
        return any(hole.distance(pos[v], j) <= d for j in jpos)

    children: list[SearchNode] = []
    seen = set()

    def emit(key, make, case):
        if key in seen:
            return
        seen.add(key)
        children.append(make())
        stats.case_children[case] += 1

    hole_edges = hole.edges()
    # case 1: a junction, or a hole edge touching the modulator
    if b.a1 > 0:
        for v in junction_vertices:
            if v not in m:
                emit(("vertex", v), lambda v=v: node.delete_vertices([v]), "case1")
    if b.a2 > 0:
        for e in hole_edges:
            if e[0] in m or e[1] in m:
                emit(("delete", e), lambda e=e: node.delete_edges([e]), "case1")
    # case 2: hole elements close to a junction
    if b.a1 > 0:
        for v in hv:
            if v not in m and near_junction(v):
                emit(("vertex", v), lambda v=v: node.delete_vertices([v]), "case2")
    if b.a2 > 0:
        for e in hole_edges:
            if near_junction(e[0]) and near_junction(e[1]):
                emit(("delete", e), lambda e=e: node.delete_edges([e]), "case2")
    # case 3: long segments, cut by minimum mixed separators
    for seg in segments:
        if seg.end - seg.start <= 2 * d:
            continue
        pc = pcs[seg.path_id]
        s, t = seg.start, seg.end
        s2, t2 = s + d, t - d
        path = pc.path
        left = frozenset(path[s:s2 + 1])
        right = frozenset(path[t2:t + 1])
        if hc.chordal_graph.set_neighborhood(left) & right:
            continue  # only possible when t - s = 2d + 1; case 2 covers it
        region = segment_region(hc, pc, s, t)
        fs = induced_subgraph(hc.chordal_graph, region)
        for a, bmin, sep in separator_profile(fs, left, right, b.a1, b.a2):
            if bmin is None or (a == 0 and bmin == 0):
                continue
            sep = minimalize(fs, left, right, sep)
            key = ("sep", sep.vertices, sep.edges)
            emit(key, lambda sep=sep: node.separate(sep.vertices, sep.edges), "case3")

    ceiling = branch_ceiling(hc, len(junction_vertices), len(segments), b)
    if len(children) > ceiling:
        raise AssertionError(f"{len(children)} children exceed the ceiling {ceiling}")
    stats.max_ceiling_ratio = max(stats.max_ceiling_ratio, len(children) / max(ceiling, 1))
    return children


def segment_region(hc: HoleContext, pc, i: int, j: int) -> frozenset[int]:
    """Vertices of the bag subtree strictly between the bags of v_i and v_j, plus v_i and v_j."""
    tree = pc.tree
    lo = pc.bags[pc.last[i]]
    hi = pc.bags[pc.first[j]]
    start = pc.bags[pc.last[i] + 1]
    bags = tree.subtree(start, removed=(lo, hi))
    out = set().union(*(tree.bags[x] for x in bags))
    return frozenset(out | {pc.path[i], pc.path[j]})

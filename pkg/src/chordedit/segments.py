"""Decomposition of a long shortest hole into junction-delimited segments.

Given a shortest hole H and a modulator M (G - M chordal), the vertices split
into M, the common neighbours of H outside M, and the chordal remainder. Each
maximal path of H - M is analysed through the clique tree of the remainder:
the bags between its two ends, the vertices lying on induced end-to-end
paths, and the branches hanging off them. Junctions are path vertices with a
local reason to interact with M or another hole; segments run between
consecutive junctions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chordality import CliqueTree, clique_tree, is_chordal, is_simplicial_set, tight_bag_path
from .graph import Edge, Graph, SizeTriple, component_of, connected_components, induced_subgraph
from .holes import Hole, shortest_hole, verify_hole


class InvariantViolation(AssertionError):
    """A structural property that must hold for a shortest hole failed."""


@dataclass(frozen=True)
class HoleContext:
    graph: Graph
    hole: Hole
    modulator: frozenset[int]
    common: frozenset[int]  # common neighbours of every hole vertex
    common_in_modulator: frozenset[int]
    common_free: frozenset[int]
    chordal_part: frozenset[int]  # V(G) minus modulator and common neighbours
    chordal_graph: Graph
    tree: CliqueTree
    paths: tuple[tuple[int, ...], ...]
    position: dict = field(repr=False)  # vertex -> index on the hole

    @property
    def outer_modulator(self) -> frozenset[int]:
        """Modulator vertices that are not common neighbours of the hole."""
        return self.modulator - self.common_in_modulator


@dataclass(frozen=True)
class PathContext:
    path: tuple[int, ...]
    tree: CliqueTree  # clique tree re-hung so the bag path has no nested separators
    bags: tuple[int, ...]  # bag indices K_1..K_q (0-based positions here)
    first: tuple[int, ...]
    last: tuple[int, ...]
    separators: tuple[frozenset[int], ...]
    middle_bags: frozenset[int]  # bags of the subtree holding K_2..K_{q-1}
    span: frozenset[int]  # union of middle_bags plus the two path ends
    core: frozenset[int]  # vertices of induced end-to-end paths
    branches: tuple[frozenset[int], ...]
    branch_attachments: tuple[frozenset[int], ...]
    near: tuple[frozenset[int], ...]  # path positions each branch is near to


@dataclass(frozen=True)
class Junction:
    vertex: int
    index: int
    types: frozenset[int]
    witnesses: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Segment:
    path_id: int
    start: int
    end: int
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return self.end - self.start


def _consecutive_on_cycle(positions: Sequence[int], length: int) -> bool:
    ps = sorted(set(positions))
    if len(ps) <= 1:
        return True
    if len(ps) >= length:
        return True
    # a cyclic arc has exactly one gap larger than 1
    gaps = sum(1 for a, b in zip(ps, ps[1:] + [ps[0] + length]) if b - a > 1)
    return gaps == 1


def build_hole_context(g: Graph, h: Hole, m, check: bool = True) -> HoleContext:
    m = frozenset(m)
    if not m <= g.vertices:
        raise ValueError("modulator has vertices outside the graph")
    if not is_chordal(g.remove_vertices(m)):
        raise ValueError("modulator is not a hole cover")
    if check and not verify_hole(g, h):
        raise InvariantViolation("not a hole")
    hv = h.vertices
    common = frozenset.intersection(*(g.neighbors(v) for v in hv))
    if not g.is_clique(common):
        raise InvariantViolation("common neighbours of a shortest hole must form a clique")
    position = {v: i for i, v in enumerate(hv)}
    if check and len(hv) > 4:
        # a vertex may see two opposite corners of a 4-hole
        hs = h.vertex_set
        for v in g.vertices - common - hs:
            nh = [position[u] for u in g.neighbors(v) & hs]
            if len(nh) > 3 or not _consecutive_on_cycle(nh, len(hv)):
                raise InvariantViolation(f"vertex {v} sees non-consecutive or >3 hole vertices")
    if not set(hv) & m:
        raise InvariantViolation("hole avoids the modulator")
    rest = g.vertices - m - common
    g0 = induced_subgraph(g, rest)
    tree = clique_tree(g0)
    # maximal runs of non-modulator vertices, starting after a modulator vertex
    start = next(i for i, v in enumerate(hv) if v in m)
    rotated = hv[start + 1:] + hv[:start + 1]
    paths = []
    run: list[int] = []
    for v in rotated:
        if v in m:
            if run:
                paths.append(tuple(run))
            run = []
        else:
            run.append(v)
    return HoleContext(
        graph=g,
        hole=h,
        modulator=m,
        common=common,
        common_in_modulator=common & m,
        common_free=common - m,
        chordal_part=frozenset(rest),
        chordal_graph=g0,
        tree=tree,
        paths=tuple(paths),
        position=position,
    )


def _minimal_separator(g: Graph, s: frozenset[int], a: int, b: int) -> bool:
    ca = component_of(g, a, s)
    if b in ca:
        return False
    cb = component_of(g, b, s)
    return all(g.neighbors(v) & ca and g.neighbors(v) & cb for v in s)


def build_path_context(hc: HoleContext, path: Sequence[int], check: bool = True) -> PathContext:
    path = tuple(path)
    p = len(path)
    if p <= 3:
        raise ValueError("paths of at most three vertices form a single segment")
    g0 = hc.chordal_graph
    v1, vp = path[0], path[-1]
    if g0.has_edge(v1, vp):
        raise ValueError("path ends are adjacent")
    tree, bp = tight_bag_path(hc.tree, v1, vp)
    if bp is None:
        raise InvariantViolation("path ends lie in different components")
    bags = bp.bags
    q = len(bags)
    if check and q <= 2:
        raise InvariantViolation("bag path of a long hole path has at most two bags")
    first, last = [], []
    for v in path:
        idx = [ell for ell, b in enumerate(bags) if v in tree.bags[b]]
        if not idx:
            raise InvariantViolation(f"path vertex {v} misses the bag path")
        first.append(idx[0])
        last.append(idx[-1])
    if check:
        if first[0] != 0 or last[0] != 0 or first[-1] != q - 1 or last[-1] != q - 1:
            raise InvariantViolation("path ends must sit only in the end bags")
        for i in range(1, p - 1):
            if not (first[i] <= last[i - 1] < first[i + 1] <= last[i]):
                raise InvariantViolation(f"bag index order broken at path position {i}")
    middle = frozenset(tree.subtree(bags[1], removed=(bags[0], bags[-1])))
    span = set().union(*(tree.bags[b] for b in middle)) | {v1, vp}
    counts: dict[int, int] = {}
    for b in bags:
        for v in tree.bags[b]:
            counts[v] = counts.get(v, 0) + 1
    core = frozenset(v for v, c in counts.items() if c >= 2) | {v1, vp}
    branch_graph = induced_subgraph(g0, frozenset(span) - core)
    branches = tuple(connected_components(branch_graph))
    attachments = tuple(g0.set_neighborhood(c) for c in branches)
    near = []
    for c, att in zip(branches, attachments):
        near.append(frozenset(i for i, v in enumerate(path) if att <= g0.closed_neighborhood(v)))
    pc = PathContext(
        path=path,
        tree=tree,
        bags=bags,
        first=tuple(first),
        last=tuple(last),
        separators=bp.separators,
        middle_bags=middle,
        span=frozenset(span),
        core=core,
        branches=branches,
        branch_attachments=attachments,
        near=tuple(near),
    )
    if check:
        check_path_context(hc, pc)
    return pc


def check_path_context(hc: HoleContext, pc: PathContext, brute_force_limit: int = 12) -> None:
    """Assert the structural facts every path context must satisfy."""
    g = hc.graph
    g0 = hc.chordal_graph
    tree = pc.tree
    inner = set().union(*(tree.bags[b] for b in pc.bags[1:-1]))
    ends = {pc.path[0], pc.path[-1]}
    for sep in pc.separators:
        if not _minimal_separator(g0, sep, pc.path[0], pc.path[-1]):
            raise InvariantViolation("bag path separator is not a minimal separator of the path ends")
    if not (pc.core - ends) <= inner:
        raise InvariantViolation("core vertex outside the interior bags")
    for c, att, near in zip(pc.branches, pc.branch_attachments, pc.near):
        if not g0.is_clique(att):
            raise InvariantViolation("branch attachment is not a clique")
        if not any(att <= tree.bags[b] for b in pc.bags[1:-1]):
            raise InvariantViolation("branch attachment not inside one interior bag")
        if len(near) > 3:
            raise InvariantViolation("branch near to more than three path vertices")
    for x in pc.core:
        missing = hc.common_free - g.neighbors(x)
        if missing:
            raise InvariantViolation(f"core vertex {x} not joined to common neighbour(s) {sorted(missing)}")
    if len(hc.chordal_part) <= brute_force_limit:
        from .oracle import enumerate_induced_paths

        brute = set()
        for path in enumerate_induced_paths(g0, pc.path[0], pc.path[-1]):
            brute.update(path)
        if brute != set(pc.core):
            raise InvariantViolation("bag-count and induced-path characterisations of the core differ")


def classify_junctions(pc: PathContext, g: Graph, hc: HoleContext) -> list[Junction]:
    """Junctions of the path in order; the two path ends are always junctions."""
    outer = hc.outer_modulator
    tree = hc.tree
    touching = {}
    for u in hc.chordal_part:
        ws = g.neighbors(u) & outer
        if ws:
            touching[u] = ws
    branch_witness = []
    branch_simplicial = []
    for c in pc.branches:
        branch_witness.append(g.set_neighborhood(c) & outer)
        branch_simplicial.append(is_simplicial_set(g, c))
    near_of: dict[int, list[int]] = {}
    for bi, near in enumerate(pc.near):
        for i in near:
            near_of.setdefault(i, []).append(bi)
    out = []
    for i, v in enumerate(pc.path):
        types = set()
        witnesses: set[int] = set()
        for b in tree.bags_of(v):
            for u in tree.bags[b]:
                if u in touching:
                    types.add(1)
                    witnesses |= touching[u]
        for bi in near_of.get(i, ()):
            if branch_witness[bi]:
                types.add(2)
                witnesses |= branch_witness[bi]
            if not branch_simplicial[bi]:
                types.add(3)
        for x in g.neighbors(v) & pc.core:
            if hc.common - g.neighbors(x) - {x}:
                types.add(4)
                break
        if i in (0, len(pc.path) - 1) and 1 not in types:
            raise InvariantViolation("path end is not a type-(1) junction")
        if types:
            out.append(Junction(v, i, frozenset(types), frozenset(witnesses)))
    return out


def decompose_segments(path: Sequence[int], junction_indices: Sequence[int], path_id: int = 0) -> list[Segment]:
    """Segments between consecutive junctions; a path of at most three vertices is one segment."""
    path = tuple(path)
    idx = sorted(set(junction_indices) | {0, len(path) - 1})
    if len(path) <= 3:
        idx = [0, len(path) - 1]
    if len(idx) == 1:
        return [Segment(path_id, 0, 0, path)]
    return [Segment(path_id, s, t, path[s:t + 1]) for s, t in zip(idx, idx[1:])]


def segment_bound(modulator_size: int, k: int) -> int:
    return modulator_size * (12 * k * k + 87 * k + 75)


@dataclass(frozen=True)
class GuardVerdict:
    kind: str  # "within" | "forced" | "infeasible"
    vertex: Optional[int] = None
    holes: tuple[Hole, ...] = ()


WITHIN_BOUND = GuardVerdict("within")


def _hole_through(g: Graph, apex: int, region) -> Optional[Hole]:
    """A hole made of ``apex`` and an induced path through ``region``."""
    region = set(region) - {apex}
    nb = g.neighbors(apex)
    inside = induced_subgraph(g, frozenset(region - nb))
    for comp in connected_components(inside):
        attach = sorted(v for v in region & nb if g.neighbors(v) & comp)
        for i, x1 in enumerate(attach):
            for x2 in attach[i + 1:]:
                if g.has_edge(x1, x2):
                    continue
                sub = induced_subgraph(g, comp | {x1, x2})
                from .chordality import _bfs_path

                path = _bfs_path(sub, x1, x2, ())
                if path is None:
                    continue
                h = Hole(tuple(path) + (apex,))
                if verify_hole(g, h):
                    return h
    return None


def _packing(holes: Sequence[Hole], shareable: frozenset[int]) -> list[Hole]:
    """Greedy family of holes pairwise sharing only ``shareable`` vertices and no edge."""
    chosen: list[Hole] = []
    used_vertices: set[int] = set()
    used_edges: set[Edge] = set()
    for h in holes:
        vs = h.vertex_set - shareable
        es = set(h.edges())
        if vs & used_vertices or es & used_edges:
            continue
        chosen.append(h)
        used_vertices |= vs
        used_edges |= es
    return chosen


def segment_bound_guard(segments: Sequence[Segment], hc: HoleContext, budget: SizeTriple,
                        path_contexts: Optional[dict] = None,
                        junctions: Optional[dict] = None) -> GuardVerdict:
    """Within the segment bound, or a certified forced deletion / infeasibility.

    Beyond the bound, candidate holes are built around junctions and kept only
    if verified; the verdict changes only when a verified packing of more than
    k1 + k2 holes (each longer than k3 + 3) exists. Otherwise the caller keeps
    branching over every segment.
    """
    k = budget.total
    if len(segments) <= segment_bound(len(hc.modulator), k):
        return WITHIN_BOUND
    if not path_contexts or not junctions:
        return WITHIN_BOUND
    g = hc.graph
    need = budget.a1 + budget.a2 + 1
    long_enough = budget.a3 + 4
    candidates: list[Hole] = []
    for pid, pc in path_contexts.items():
        js = junctions.get(pid, [])
        # holes through a modulator witness of type (1)/(2) junctions
        by_witness: dict[int, list[Junction]] = {}
        for j in js:
            for w in j.witnesses:
                by_witness.setdefault(w, []).append(j)
        for w, wjs in by_witness.items():
            for grp in range(0, len(wjs) - 4, 5):
                left, right = wjs[grp + 1], wjs[grp + 4]
                lo, hi = max(left.index - 1, 0), min(right.index + 1, len(pc.path) - 1)
                region = set(pc.path[lo:hi + 1])
                for bi, near in enumerate(pc.near):
                    if near & {left.index, right.index}:
                        region |= pc.branches[bi]
                for b in hc.tree.bags_of(left.vertex) + hc.tree.bags_of(right.vertex):
                    region |= {u for u in hc.tree.bags[b] if g.has_edge(u, w)}
                h = _hole_through(g, w, region)
                if h is not None and len(h) >= long_enough:
                    candidates.append(h)
        # holes around type (3)/(4)-only junctions
        only34 = [j for j in js if not j.types & {1, 2}]
        for i in range(3, len(only34) - 2, 7):
            lo_j, hi_j = only34[i - 2], only34[i + 2]
            lo_bag, hi_bag = pc.last[lo_j.index], pc.first[hi_j.index]
            window = set()
            for ell in range(lo_bag, hi_bag + 1):
                window |= hc.tree.bags[pc.bags[ell]]
            window &= pc.core
            for bi, near in enumerate(pc.near):
                if only34[i].index in near:
                    window |= pc.branches[bi]
            for y in sorted(hc.common):
                h = _hole_through(g, y, window)
                if h is not None and len(h) >= long_enough:
                    candidates.append(h)
                    break
            else:
                sub = induced_subgraph(g, frozenset(window) | hc.common)
                h = shortest_hole(sub)
                if h is not None and len(h) >= long_enough and verify_hole(g, h):
                    candidates.append(h)
    packed = _packing(candidates, hc.modulator)
    if len(packed) >= need:
        return GuardVerdict("infeasible", holes=tuple(packed[:need]))
    for u in sorted(hc.common_free):
        through = [h for h in candidates if u in h.vertex_set]
        fam = _packing(through, hc.modulator | {u})
        if len(fam) >= need:
            return GuardVerdict("forced", vertex=u, holes=tuple(fam[:need]))
    return WITHIN_BOUND

import itertools
import random

import pytest

from chordedit.chordality import is_chordal
from chordedit.generate import plant_edits, random_chordal, random_graph
from chordedit.graph import EditingSet, Graph, SizeTriple, apply_editing
from chordedit.holes import shortest_hole
from chordedit.oracle import OracleBudget, brute_force_edit, graph_atlas
from chordedit.solver import (
    CompressionInstance,
    SearchNode,
    SolverConfig,
    SolverStats,
    break_long_hole,
    compress,
    preprocess_simplicial,
    solve,
)

from conftest import cycle


def decorated_cycle(n, seed):
    """A long rim with ears, pendants and sometimes a second short hole on it."""
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for _ in range(rng.randint(0, 4)):
        i = rng.randrange(n)
        edges += [(i, nxt), ((i + 1) % n, nxt)]
        nxt += 1
    for _ in range(rng.randint(0, 3)):
        edges.append((rng.randrange(nxt), nxt))
        nxt += 1
    if rng.random() < 0.5:
        base = prev = rng.randrange(n)
        for _ in range(rng.randint(3, 5)):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        edges.append((prev, base))
    return Graph(range(nxt), edges)


def test_solve_examples(c4, c5):
    g = random_chordal(12, 0.5, 3)
    assert solve(g, 2, 2, 2).is_empty
    e = solve(c4, 0, 0, 1)
    assert e.size == SizeTriple(0, 0, 1)
    assert solve(c5, 0, 0, 1) is None
    assert brute_force_edit(c5, OracleBudget(0, 0, 1)) is None


def test_compress_examples(c4):
    g = random_chordal(10, 0.5, 1)
    assert compress(CompressionInstance(g, SizeTriple(1, 1, 1), {0})).is_empty
    e = compress(CompressionInstance(c4, SizeTriple(0, 0, 1), {1}))
    assert e.size == SizeTriple(0, 0, 1)
    c8 = cycle(8)
    assert compress(CompressionInstance(c8, SizeTriple(0, 0, 2), {0})) is None
    assert brute_force_edit(c8, OracleBudget(0, 0, 2)) is None


def test_compression_instance_checks_cover():
    with pytest.raises(ValueError):
        CompressionInstance(cycle(5), SizeTriple(1, 0, 0), set())


def test_compress_never_deletes_modulator():
    for seed in range(150):
        g = random_graph(8, 0.4, seed)
        m = set()
        while shortest_hole(g.remove_vertices(m)) is not None:
            m.add(min(shortest_hole(g.remove_vertices(m)).vertices))
        e = compress(CompressionInstance(g, SizeTriple(2, 1, 1), m))
        if e is not None:
            assert not e.vertices & m
            assert is_chordal(apply_editing(g, e))
            assert e.size <= SizeTriple(2, 1, 1)


def test_break_long_hole_zero_budget():
    g = cycle(8)
    node = SearchNode(g, SizeTriple(0, 0, 0), frozenset({0}))
    assert break_long_hole(node, shortest_hole(g)) == []


def test_break_long_hole_short_segments_only():
    g = cycle(8)
    st = SolverStats()
    kids = break_long_hole(SearchNode(g, SizeTriple(1, 0, 0), frozenset({0})), shortest_hole(g), stats=st)
    assert kids and st.case_children["case3"] == 0


def test_break_long_hole_single_long_segment():
    # C18 with one modulator vertex: junctions at path positions 0, 1, 15, 16
    # leave one segment of length 14 > 2d + 1 with d = 6
    g = cycle(18)
    st = SolverStats()
    kids = break_long_hole(SearchNode(g, SizeTriple(1, 0, 0), frozenset({0})), shortest_hole(g), stats=st)
    assert 1 <= st.case_children["case3"] <= 2
    assert all(k.budget.a1 == 0 for k in kids)


def test_preprocess_simplicial():
    tree = Graph(range(6), [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert preprocess_simplicial(tree).n == 0
    assert preprocess_simplicial(cycle(5)) == cycle(5)
    g = Graph(range(5), list(cycle(4).edges()) + [(0, 4)])
    assert preprocess_simplicial(g) == cycle(4)


BUDGETS = [b for b in itertools.product(range(3), repeat=3) if sum(b) <= 3]


def test_atlas_small_matches_oracle():
    for g in graph_atlas(5, connected_only=True):
        for b in BUDGETS:
            s = solve(g, *b)
            o = brute_force_edit(g, OracleBudget(*b))
            assert (s is None) == (o is None), (g, b)


def test_long_holes_match_oracle():
    """Instances long enough for separator branching, against a raised-cap oracle."""
    case3 = 0
    for seed in range(120):
        g = decorated_cycle(random.Random(seed).randint(17, 19), seed)
        if g.n > 26:
            continue
        for b in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1), (1, 0, 1)]:
            st = SolverStats()
            s = solve(g, *b, SolverConfig(check_invariants=True), st)
            o = brute_force_edit(g, OracleBudget(*b, max_n=26))
            assert (s is None) == (o is None), (seed, b)
            if s is not None:
                assert is_chordal(apply_editing(g, s)) and s.size <= SizeTriple(*b)
            case3 += st.case_children["case3"]
    assert case3 > 0


def test_threads_keep_verdicts():
    for seed in range(30):
        rng = random.Random(seed)
        p = [rng.randint(0, 1) for _ in range(3)]
        inst = plant_edits(random_chordal(20, 0.5, seed), *p, seed=seed)
        a = solve(inst.graph, *p)
        b = solve(inst.graph, *p, SolverConfig(threads=3))
        assert (a is None) == (b is None)
        if b is not None:
            assert is_chordal(apply_editing(inst.graph, b))


def test_reuse_shortcut_does_not_change_verdicts():
    for seed in range(60):
        g = random_graph(7, 0.45, seed)
        for b in [(1, 0, 0), (0, 1, 1), (1, 1, 0)]:
            x = solve(g, *b, SolverConfig(reuse_previous=False))
            y = solve(g, *b)
            assert (x is None) == (y is None)


def test_depth_and_ceiling():
    for k in range(1, 5):
        for seed in range(8):
            rng = random.Random(seed)
            p = [0, 0, 0]
            for _ in range(k):
                p[rng.randrange(3)] += 1
            inst = plant_edits(random_chordal(50, 0.5, seed), *p, seed=seed)
            st = SolverStats()
            assert solve(inst.graph, *p, stats=st) is not None
            assert st.max_depth <= k
            assert st.max_ceiling_ratio <= 1.0


def test_negative_budget():
    assert solve(cycle(4), -1, 0, 0) is None


def test_result_is_editing_set(c5):
    e = solve(c5, 1, 0, 0)
    assert isinstance(e, EditingSet) and e.size == SizeTriple(1, 0, 0)

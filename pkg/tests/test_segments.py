import random

import pytest

from chordedit.generate import plant_edits, random_chordal
from chordedit.graph import Graph, SizeTriple
from chordedit.holes import Hole, shortest_hole
from chordedit.segments import (
    InvariantViolation,
    Segment,
    build_hole_context,
    build_path_context,
    classify_junctions,
    decompose_segments,
    segment_bound,
    segment_bound_guard,
)

from conftest import cycle


def greedy_cover(g):
    m = set()
    while True:
        h = shortest_hole(g.remove_vertices(m))
        if h is None:
            return m
        m.add(min(h.vertices))


def test_c6_context():
    g = cycle(6)
    hc = build_hole_context(g, shortest_hole(g), {0})
    assert hc.common == set() and hc.chordal_part == {1, 2, 3, 4, 5}
    assert hc.paths in (((1, 2, 3, 4, 5),), ((5, 4, 3, 2, 1),))


def test_wheel_context():
    rim = cycle(6)
    g = Graph(list(range(7)), list(rim.edges()) + [(6, v) for v in range(6)])
    h = shortest_hole(g.remove_vertices({6}))
    with pytest.raises(ValueError):
        build_hole_context(g, h, {6})  # the hub alone does not cover the rim
    hc = build_hole_context(g, h, {6, 0})
    assert hc.common == {6} and hc.common_in_modulator == {6} and hc.common_free == set()
    assert hc.chordal_part == {1, 2, 3, 4, 5}


def test_rejects_non_cover():
    with pytest.raises(ValueError):
        build_hole_context(cycle(5), shortest_hole(cycle(5)), set())


def test_path_context_bare_path():
    g = cycle(6)
    hc = build_hole_context(g, shortest_hole(g), {0})
    pc = build_path_context(hc, hc.paths[0])
    assert pc.span == pc.core == {1, 2, 3, 4, 5}
    assert pc.branches == ()
    assert len(pc.bags) == 4


def test_path_context_pendant():
    g = Graph(range(7), list(cycle(6).edges()) + [(3, 6)])
    hc = build_hole_context(g, shortest_hole(g), {0})
    pc = build_path_context(hc, hc.paths[0])
    assert 6 in pc.span and 6 not in pc.core
    assert pc.branches == (frozenset({6}),)
    assert 2 in pc.near[0]  # path position of vertex 3


def test_short_path_rejected():
    g = cycle(5)
    hc = build_hole_context(g, shortest_hole(g), {0, 2})
    with pytest.raises(ValueError):
        build_path_context(hc, (3, 4))


def test_junctions_on_bare_cycle():
    g = cycle(8)
    hc = build_hole_context(g, shortest_hole(g), {0})
    pc = build_path_context(hc, hc.paths[0])
    js = classify_junctions(pc, g, hc)
    # the ends touch the modulator; their path neighbours share the end bags
    assert [j.index for j in js] == [0, 1, 5, 6]
    assert all(j.types == {1} and j.witnesses == {0} for j in js)


def test_junction_type_two():
    edges = list(cycle(8).edges()) + [(4, 8), (8, 9)]
    g = Graph(range(10), edges)
    hc = build_hole_context(g, shortest_hole(g), {0, 9})
    pc = build_path_context(hc, hc.paths[0])
    js = {j.vertex: j for j in classify_junctions(pc, g, hc)}
    assert 2 in js[4].types and 9 in js[4].witnesses


def test_junction_type_three():
    # rim 0..7 with hub 9 (in the modulator), and a branch 8-10-11-12-13-14
    # hanging off 4 whose far end touches the hub: the branch is simplicial
    # in the chordal part but closes an 8-hole through the hub
    rim = list(cycle(8).edges())
    hub = [(9, v) for v in range(8)]
    branch = [(4, 8), (8, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 9)]
    g = Graph(list(range(15)), rim + hub + branch)
    h = Hole(tuple(range(8)))
    m = {0, 9}
    hc = build_hole_context(g, h, m)
    assert hc.common_in_modulator == {9}
    pc = build_path_context(hc, hc.paths[0])
    assert pc.branches == (frozenset({8, 10, 11, 12, 13, 14}),)
    js = {j.vertex: j for j in classify_junctions(pc, g, hc)}
    assert js[4].types == {3}


def test_decompose_segments():
    p = tuple(range(1, 10))
    assert decompose_segments(p, [0, 8]) == [Segment(0, 0, 8, p)]
    segs = decompose_segments(p, [0, 3, 8])
    assert [(s.vertices[0], s.vertices[-1]) for s in segs] == [(1, 4), (4, 9)]
    assert decompose_segments((5, 6, 7), [1]) == [Segment(0, 0, 2, (5, 6, 7))]


def test_segment_bound_values():
    assert segment_bound(1, 1) == 174
    assert segment_bound(2, 2) == 594


def test_guard_within_bound():
    g = cycle(8)
    hc = build_hole_context(g, shortest_hole(g), {0})
    segs = decompose_segments(hc.paths[0], [0, 1, 5, 6])
    assert len(segs) == 3
    assert segment_bound_guard(segs, hc, SizeTriple(1, 0, 0)).kind == "within"


def _contexts(seeds):
    for seed in seeds:
        rng = random.Random(seed)
        base = random_chordal(rng.randint(8, 22), rng.uniform(0.2, 0.8), seed)
        p = [0, 0, 0]
        for _ in range(rng.randint(1, 3)):
            p[rng.randrange(3)] += 1
        try:
            g = plant_edits(base, *p, seed=seed).graph
        except ValueError:
            continue
        h = shortest_hole(g)
        if h is None or len(h) < 5:
            continue
        m = greedy_cover(g)
        yield g, h, m


def test_structure_on_random_instances():
    built = 0
    for g, h, m in _contexts(range(400)):
        hc = build_hole_context(g, h, m, check=True)
        for path in hc.paths:
            if len(path) <= 3:
                continue
            pc = build_path_context(hc, path, check=True)
            js = classify_junctions(pc, g, hc)
            segs = decompose_segments(path, [j.index for j in js])
            assert len(segs) == len(js) - 1
            covered = {v for s in segs for v in s.vertices}
            assert covered == set(path)
            for s in segs:
                inner = set(s.vertices[1:-1])
                assert not inner & {j.vertex for j in js}
            built += 1
    assert built > 0


def test_invariant_violation_on_bad_hole():
    # a non-shortest hole: the 8-cycle of a graph that also has a 4-hole
    g = Graph(range(8), list(cycle(8).edges()) + [(0, 3)])
    with pytest.raises(InvariantViolation):
        build_hole_context(g, Hole(tuple(range(8))), {0}, check=True)


def test_core_ignores_non_minimal_bag_separators():
    # the clique tree hangs {0, 4} off {0, 1, 2}, so 2 sits in two bags of the
    # bag path from 11 to 4 although no induced 11-4 path uses it
    g0 = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 7), (1, 10), (2, 3), (2, 5), (2, 9),
          (3, 5), (3, 6), (3, 8), (6, 8), (6, 11)]
    g = Graph(range(13), g0 + [(4, 12), (11, 12)])
    h = Hole((0, 4, 12, 11, 6, 3))
    hc = build_hole_context(g, h, {12})
    pc = build_path_context(hc, hc.paths[0], check=True)
    assert pc.core == {0, 3, 4, 6, 11}
    assert frozenset({2}) not in pc.branches and any(2 in c for c in pc.branches)

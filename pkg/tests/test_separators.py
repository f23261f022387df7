import itertools
import random

import pytest

from chordedit.chordality import NotChordalError, is_chordal
from chordedit.generate import random_chordal
from chordedit.graph import Graph, edge, induced_subgraph
from chordedit.oracle import brute_force_mixed_separator, min_cut_table
from chordedit.separators import (
    MixedSeparator,
    find_mixed_separator,
    find_set_separator,
    is_inclusion_minimal,
    min_b_profile,
    minimalize,
    residue_components,
    separates,
)

from conftest import cycle

P3 = Graph([0, 1, 2], [(0, 1), (1, 2)])
X, W, Y = 0, 1, 2
# K4 minus the edge xy: x=0, y=3, shared neighbours u=1, v=2
K4_XY = Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def test_path_examples():
    assert find_mixed_separator(P3, X, Y, 1, 0) == MixedSeparator({W})
    sep = find_mixed_separator(P3, X, Y, 0, 1)
    assert sep.vertices == set() and sep.edges in ({edge(X, W)}, {edge(W, Y)})
    assert find_mixed_separator(P3, X, Y, 0, 0) is None


def test_k4_minus_edge():
    assert find_mixed_separator(K4_XY, 0, 3, 0, 1) is None
    sep = find_mixed_separator(K4_XY, 0, 3, 0, 2)
    assert sep.size == (0, 2) and separates(K4_XY, {0}, {3}, sep)
    assert not brute_force_mixed_separator(K4_XY, 0, 3, 0, 1)
    assert brute_force_mixed_separator(K4_XY, 0, 3, 0, 2)


def test_rejections():
    with pytest.raises(ValueError):
        find_mixed_separator(P3, X, W, 1, 1)
    with pytest.raises(NotChordalError):
        find_mixed_separator(cycle(5), 0, 2, 1, 1)


def test_profiles():
    assert min_b_profile(P3, {X}, {Y}, 1, 1) == [(0, 1), (1, 0)]
    assert min_b_profile(Graph([0, 1]), {0}, {1}, 2, 1) == [(0, 0), (1, 0), (2, 0)]
    assert min_b_profile(K4_XY, {0}, {3}, 2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert min_b_profile(K4_XY, {0}, {3}, 0, 1) == [(0, None)]


def test_inclusion_minimal():
    assert is_inclusion_minimal(P3, X, Y, MixedSeparator({W}))
    assert not is_inclusion_minimal(P3, X, Y, MixedSeparator({W}, {edge(X, W)}))
    assert is_inclusion_minimal(K4_XY, 0, 3, MixedSeparator((), {(0, 1), (0, 2)}))
    with pytest.raises(ValueError):
        is_inclusion_minimal(P3, X, Y, MixedSeparator())


def test_against_cut_table():
    for seed in range(60):
        rng = random.Random(seed)
        f = random_chordal(rng.randint(3, 9), rng.random(), seed)
        for x, y in itertools.combinations(f.sorted_vertices(), 2):
            if f.has_edge(x, y):
                continue
            table = min_cut_table(f, x, y, 4)
            for a in range(5):
                for b in range(5 - a):
                    sep = find_mixed_separator(f, x, y, a, b)
                    assert (sep is not None) == (table[a] <= b)
                    if sep is not None:
                        assert len(sep.vertices) <= a and len(sep.edges) <= b
                        assert separates(f, {x}, {y}, sep)
                        small = minimalize(f, {x}, {y}, sep)
                        assert is_inclusion_minimal(f, x, y, small)
                        for comp in residue_components(f, small):
                            assert is_chordal(induced_subgraph(f, comp).with_edges(
                                removed=[e for e in small.edges if set(e) <= comp]))


def test_profile_monotone():
    for seed in range(80):
        f = random_chordal(9, 0.5, seed)
        for x, y in itertools.combinations(f.sorted_vertices(), 2):
            if f.has_edge(x, y):
                continue
            bs = [b for _, b in min_b_profile(f, {x}, {y}, 3, 3)]
            known = [b for b in bs if b is not None]
            assert known == sorted(known, reverse=True)
            # once feasible, stays feasible as a grows
            first = next((i for i, b in enumerate(bs) if b is not None), len(bs))
            assert all(b is not None for b in bs[first:])


def _set_oracle(f, xs, ys, a, b):
    others = sorted(f.vertices - xs - ys)
    for r in range(a + 1):
        for vs in itertools.combinations(others, r):
            h = f.remove_vertices(vs)
            for s in range(b + 1):
                for es in itertools.combinations(h.sorted_edges(), s):
                    if separates(f, xs, ys, MixedSeparator(vs, es)):
                        return True
    return False


def test_set_terminals_against_brute_force():
    checked = 0
    for seed in range(200):
        rng = random.Random(seed)
        f = random_chordal(rng.randint(5, 8), rng.random(), seed)
        vs = f.sorted_vertices()
        xs = frozenset(rng.sample(vs, 2))
        rest = [v for v in vs if v not in xs and not (f.neighbors(v) & xs)]
        if not rest:
            continue
        ys = frozenset(rng.sample(rest, min(2, len(rest))))
        if f.set_neighborhood(ys) & xs:
            continue
        for a, b in [(0, 1), (1, 0), (1, 1), (0, 2), (2, 1), (1, 2)]:
            sep = find_set_separator(f, xs, ys, a, b)
            assert (sep is not None) == _set_oracle(f, xs, ys, a, b)
            if sep is not None:
                assert separates(f, xs, ys, sep)
                assert sep.size[0] <= a and sep.size[1] <= b
                assert not sep.vertices & (xs | ys)
            checked += 1
    assert checked > 200

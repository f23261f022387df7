import random

import pytest

from chordedit.chordality import is_chordal
from chordedit.generate import random_graph
from chordedit.graph import Graph
from chordedit.oracle import (
    OracleBudget,
    OracleCapError,
    brute_force_edit,
    brute_force_mixed_separator,
    enumerate_induced_cycles,
    graph_atlas,
)

from conftest import cycle


def test_edit_examples(c4, c5):
    assert brute_force_edit(c4, OracleBudget(0, 0, 1)) is not None
    assert brute_force_edit(c5, OracleBudget(0, 0, 1)) is None
    assert brute_force_edit(c5, OracleBudget(0, 0, 2)) is not None
    assert brute_force_edit(cycle(6), OracleBudget(1, 0, 0)) is not None


def test_caps():
    with pytest.raises(OracleCapError):
        brute_force_edit(cycle(4), OracleBudget(2, 2, 1))
    with pytest.raises(OracleCapError):
        brute_force_edit(cycle(11), OracleBudget(1, 0, 0))
    assert brute_force_edit(cycle(11), OracleBudget(1, 0, 0, max_n=11)) is not None


def test_mixed_separator_examples():
    p3 = Graph([0, 1, 2], [(0, 1), (1, 2)])
    assert brute_force_mixed_separator(p3, 0, 2, 1, 0)
    assert not brute_force_mixed_separator(p3, 0, 2, 0, 0)
    k4xy = Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert not brute_force_mixed_separator(k4xy, 0, 3, 0, 1)
    assert brute_force_mixed_separator(k4xy, 0, 3, 0, 2)


def test_cycle_enumeration_examples():
    assert len(enumerate_induced_cycles(cycle(4))) == 1
    assert enumerate_induced_cycles(Graph(range(4), [(0, 1), (1, 2), (2, 3)])) == []
    g = cycle(6, 1).with_edges(added=[(1, 4)])
    holes = enumerate_induced_cycles(g)
    assert len(holes) == 2 and all(len(h) == 4 for h in holes)


def test_self_consistency():
    for seed in range(300):
        g = random_graph(random.Random(seed).randint(1, 7), 0.4, seed)
        zero = brute_force_edit(g, OracleBudget())
        assert (zero is not None) == (not enumerate_induced_cycles(g)) == is_chordal(g)


def test_deterministic():
    g = random_graph(7, 0.4, 11)
    b = OracleBudget(1, 1, 1)
    assert brute_force_edit(g, b) == brute_force_edit(g, b)


def test_atlas_counts():
    # connected graphs on 1..6 vertices: 1 + 1 + 2 + 6 + 21 + 112
    assert len(graph_atlas(6, connected_only=True)) == 143

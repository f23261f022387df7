"""Random chordal graphs and instances with planted editing sets.

All randomness comes from :class:`random.Random` (Mersenne Twister, MT19937)
seeded with the given integer, so a seed reproduces the same instance on
every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Edge, EditingSet, Graph, edge


def random_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """Connected chordal graph on vertices 0..n-1.

    Vertex ``v`` is attached to a random nonempty subset of a random bag of
    the graph built so far; ``density`` is the probability of keeping each bag
    vertex in that subset. Reversing the insertion order gives a perfect
    elimination ordering.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    bags: list[list[int]] = [[0]]
    edges: list[Edge] = []
    for v in range(1, n):
        i = rng.randrange(len(bags))
        bag = bags[i]
        chosen = [u for u in bag if rng.random() < density]
        if not chosen:
            chosen = [rng.choice(bag)]
        edges += [edge(u, v) for u in chosen]
        if len(chosen) == len(bag):
            bags[i] = bag + [v]
        else:
            bags.append(chosen + [v])
    return Graph(range(n), edges)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = random.Random(seed)
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@dataclass(frozen=True)
class PlantedInstance:
    graph: Graph
    base: Graph
    planted: tuple[int, int, int]
    seed: int
    added_vertices: frozenset[int] = field(default_factory=frozenset)
    added_edges: frozenset[Edge] = field(default_factory=frozenset)
    removed_edges: frozenset[Edge] = field(default_factory=frozenset)

    def inverse(self) -> EditingSet:
        """Editing set that turns ``graph`` back into ``base``."""
        return EditingSet(self.added_vertices, self.added_edges, self.removed_edges)

    def sidecar(self) -> dict:
        return {
            "p1": self.planted[0],
            "p2": self.planted[1],
            "p3": self.planted[2],
            "seed": self.seed,
            "n": self.graph.n,
            "m": self.graph.m,
        }


def plant_edits(gstar: Graph, p1: int, p2: int, p3: int, seed: int = 0) -> PlantedInstance:
    """Perturb chordal ``gstar`` by p1 new vertices, p2 new edges and p3 removed edges.

    New vertices get ids after the largest existing id and a random
    neighbourhood that contains a non-adjacent pair whenever ``gstar`` has one.
    """
    rng = random.Random(seed)
    edges = gstar.sorted_edges()
    non_edges = gstar.non_edges()
    if p2 > len(non_edges):
        raise ValueError(f"cannot add {p2} edges: only {len(non_edges)} non-edges")
    if p3 > len(edges):
        raise ValueError(f"cannot remove {p3} edges: only {len(edges)} edges")
    added = set(rng.sample(non_edges, p2))
    removed = set(rng.sample(edges, p3))
    verts = gstar.sorted_vertices()
    next_id = (max(verts) + 1) if verts else 0
    new_vertices = list(range(next_id, next_id + p1))
    new_edges: list[Edge] = []
    for v in new_vertices:
        if len(verts) >= 2 and non_edges:
            u, w = rng.choice(non_edges)
            nb = {u, w}
        else:
            nb = set(rng.sample(verts, min(len(verts), 1)))
        extra = rng.randint(0, min(3, len(verts)))
        nb |= set(rng.sample(verts, extra))
        new_edges += [edge(u, v) for u in nb]
    all_edges = (set(edges) - removed) | added | set(new_edges)
    g = Graph(verts + new_vertices, all_edges)
    return PlantedInstance(
        graph=g,
        base=gstar,
        planted=(p1, p2, p3),
        seed=seed,
        added_vertices=frozenset(new_vertices),
        added_edges=frozenset(added),
        removed_edges=frozenset(removed),
    )

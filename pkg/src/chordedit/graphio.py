"""Edge-list reading and writing.

The format is a strict DIMACS-like dialect: a header ``p <n> <m>`` followed
by exactly ``m`` lines ``e <u> <v>`` with 0-based ids below ``n``. Blank
lines are ignored; nothing else is accepted.
"""

from __future__ import annotations

import json

from .graph import EditingSet, Graph, edge


class GraphFormatError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _ints(parts, lineno):
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(lineno, "expected integers") from None
    if any(v < 0 for v in vals):
        raise GraphFormatError(lineno, "negative value")
    return vals


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        last = lineno
        tag, rest = parts[0], parts[1:]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate header")
            if len(rest) != 2:
                raise GraphFormatError(lineno, "header must be 'p <n> <m>'")
            n, m = _ints(rest, lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge before header")
            if len(rest) != 2:
                raise GraphFormatError(lineno, "edge must be 'e <u> <v>'")
            u, v = _ints(rest, lineno)
            if u == v:
                raise GraphFormatError(lineno, f"self-loop on {u}")
            if u >= n or v >= n:
                raise GraphFormatError(lineno, f"vertex id out of range 0..{n - 1}")
            e = edge(u, v)
            if e in edges:
                raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
            edges.add(e)
        else:
            raise GraphFormatError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError(last or 1, "missing header")
    if len(edges) != m:
        raise GraphFormatError(last or 1, f"header announces {m} edges, found {len(edges)}")
    return Graph(range(n), edges)


def format_graph(g: Graph) -> str:
    """Serialize ``g``; its vertex ids must be exactly 0..n-1."""
    if g.vertices != frozenset(range(g.n)):
        raise ValueError("vertex ids must be 0..n-1; relabel first")
    lines = [f"p {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def relabel(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Copy of ``g`` on ids 0..n-1 (in ascending order of the old ids) and the old-to-new map."""
    mapping = {v: i for i, v in enumerate(g.sorted_vertices())}
    return Graph(range(g.n), [(mapping[u], mapping[v]) for u, v in g.edges()]), mapping


def editing_record(e: EditingSet) -> dict:
    return {
        "deleted_vertices": sorted(e.vertices),
        "deleted_edges": [list(p) for p in sorted(e.deleted)],
        "added_edges": [list(p) for p in sorted(e.added)],
        "size": list(e.size.as_tuple()),
    }


def write_sidecar(path: str, record: dict) -> None:
    with open(path, "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")

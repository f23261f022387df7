"""Command-line entry point.

Exit status: 0 feasible, 1 infeasible, 2 usage or parse error. The JSON
record (``--json``) is the only thing written to standard output; a short
human summary goes to standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Optional, Sequence

from .chordality import is_chordal
from .generate import plant_edits, random_chordal
from .graph import apply_editing
from .graphio import GraphFormatError, editing_record, format_graph, parse_graph, write_sidecar
from .oracle import OracleBudget, OracleCapError, brute_force_edit
from .separators import find_mixed_separator
from .solver import SolverConfig, SolverStats, solve

EXIT_FEASIBLE, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chordedit", description="Chordal editing with separate budgets for "
                "vertex deletions, edge deletions and edge additions.")
    p.add_argument("--mode", choices=["solve", "oracle", "mixed-sep", "gen"], default="solve")
    p.add_argument("--input", help="graph file, or - for standard input")
    p.add_argument("--k1", type=_nonneg, default=0, help="vertex deletions (mixed-sep: separator vertices)")
    p.add_argument("--k2", type=_nonneg, default=0, help="edge deletions (mixed-sep: separator edges)")
    p.add_argument("--k3", type=_nonneg, default=0, help="edge additions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="write the result record to standard output")
    p.add_argument("--threads", type=_nonneg, default=1)
    p.add_argument("--check-invariants", action="store_true")
    p.add_argument("--source", type=int, help="mixed-sep: first terminal")
    p.add_argument("--target", type=int, help="mixed-sep: second terminal")
    p.add_argument("--n", type=_nonneg, help="gen: vertices of the chordal base graph")
    p.add_argument("--density", type=float, default=0.5, help="gen: bag-subset keep probability")
    p.add_argument("--output", help="gen: graph file (sidecar goes to <output>.json)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _read_input(path: Optional[str]):
    if path is None:
        raise UsageError("--input is required")
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _check_conflicts(args) -> None:
    if args.mode == "gen":
        if args.input is not None:
            raise UsageError("--input conflicts with --mode gen")
        if args.n is None:
            raise UsageError("--mode gen needs --n")
    else:
        for flag in ("n", "output"):
            if getattr(args, flag) is not None:
                raise UsageError(f"--{flag} is only valid with --mode gen")
    if args.mode == "mixed-sep":
        if args.source is None or args.target is None:
            raise UsageError("--mode mixed-sep needs --source and --target")
        if args.k3:
            raise UsageError("--k3 has no meaning for --mode mixed-sep")
    elif args.source is not None or args.target is not None:
        raise UsageError("--source/--target are only valid with --mode mixed-sep")
    if args.threads == 0:
        raise UsageError("--threads must be positive")


def _emit(args, record: dict, summary: str) -> None:
    if args.json:
        json.dump(record, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _edit_modes(args, g) -> int:
    t0 = time.perf_counter()
    stats: dict = {}
    if args.mode == "solve":
        st = SolverStats()
        cfg = SolverConfig(check_invariants=args.check_invariants, threads=args.threads)
        result = solve(g, args.k1, args.k2, args.k3, cfg, st)
        stats = st.as_dict()
    else:
        result = brute_force_edit(g, OracleBudget(args.k1, args.k2, args.k3))
    stats["wall_time"] = round(time.perf_counter() - t0, 6)
    if result is None:
        record = {"verdict": "infeasible", "deleted_vertices": [], "deleted_edges": [],
                  "added_edges": [], "size": None, "stats": stats}
        _emit(args, record, f"infeasible within ({args.k1},{args.k2},{args.k3})")
        return EXIT_INFEASIBLE
    if not is_chordal(apply_editing(g, result)):
        raise RuntimeError("internal error: solution does not make the graph chordal")
    record = {"verdict": "feasible", **editing_record(result), "stats": stats}
    s = result.size
    _emit(args, record, f"feasible: {s.a1} vertex deletions, {s.a2} edge deletions, "
                        f"{s.a3} edge additions")
    return EXIT_FEASIBLE


def _mixed_sep(args, g) -> int:
    if not is_chordal(g):
        raise UsageError("mixed-sep needs a chordal input graph")
    x, y = args.source, args.target
    if x not in g or y not in g or x == y:
        raise UsageError("terminals must be two distinct vertices of the graph")
    if g.has_edge(x, y):
        raise UsageError("terminals are adjacent")
    t0 = time.perf_counter()
    sep = find_mixed_separator(g, x, y, args.k1, args.k2)
    stats = {"wall_time": round(time.perf_counter() - t0, 6)}
    if sep is None:
        _emit(args, {"verdict": "infeasible", "vertices": [], "edges": [], "size": None,
                     "stats": stats}, f"no ({args.k1},{args.k2}) separator between {x} and {y}")
        return EXIT_INFEASIBLE
    record = {"verdict": "feasible", "vertices": sorted(sep.vertices),
              "edges": [list(e) for e in sorted(sep.edges)], "size": list(sep.size), "stats": stats}
    _emit(args, record, f"separator with {len(sep.vertices)} vertices and {len(sep.edges)} edges")
    return EXIT_FEASIBLE


def _gen(args) -> int:
    base = random_chordal(args.n, args.density, args.seed)
    try:
        inst = plant_edits(base, args.k1, args.k2, args.k3, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_graph(inst.graph)
    side = inst.sidecar()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        write_sidecar(args.output + ".json", side)
        if args.json:
            json.dump(side, sys.stdout, sort_keys=True)
            sys.stdout.write("\n")
    else:
        if args.json:
            raise UsageError("--json with --mode gen needs --output")
        sys.stdout.write(text)
    print(f"planted ({args.k1},{args.k2},{args.k3}) on {inst.graph.n} vertices, "
          f"{inst.graph.m} edges", file=sys.stderr)
    return EXIT_FEASIBLE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        _check_conflicts(args)
        if args.mode == "gen":
            return _gen(args)
        g = _read_input(args.input)
        if args.mode == "mixed-sep":
            return _mixed_sep(args, g)
        return _edit_modes(args, g)
    except (UsageError, GraphFormatError, OracleCapError) as exc:
        print(f"chordedit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Scaling report: solve planted instances, write a CSV and two figures.

    chordedit-report --out report/ --sizes 50 100 200 --budgets 1 2 3 4 --repeats 5
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import random
import statistics
import sys
import time
from typing import Optional, Sequence

from .generate import plant_edits, random_chordal
from .solver import SolverStats, solve

FIELDS = ["n", "k", "seed", "p1", "p2", "p3", "verdict", "seconds", "nodes", "long_hole_nodes",
          "max_children", "max_ceiling_ratio"]


def split_budget(k: int, rng: random.Random) -> tuple[int, int, int]:
    p = [0, 0, 0]
    for _ in range(k):
        p[rng.randrange(3)] += 1
    return tuple(p)


def run_one(n: int, k: int, seed: int, density: float = 0.5) -> dict:
    rng = random.Random(seed * 1000003 + n * 31 + k)
    p = split_budget(k, rng)
    inst = plant_edits(random_chordal(n, density, seed), *p, seed=seed)
    st = SolverStats()
    t0 = time.perf_counter()
    sol = solve(inst.graph, *p, stats=st)
    dt = time.perf_counter() - t0
    return {"n": n, "k": k, "seed": seed, "p1": p[0], "p2": p[1], "p3": p[2],
            "verdict": "feasible" if sol is not None else "infeasible", "seconds": round(dt, 6),
            "nodes": st.nodes, "long_hole_nodes": st.long_hole_nodes,
            "max_children": st.max_children, "max_ceiling_ratio": round(st.max_ceiling_ratio, 4)}


def fit_exponent(ns: Sequence[float], ts: Sequence[float]) -> float:
    """Least-squares slope of log t against log n."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(max(t, 1e-6)) for t in ts]
    mx, my = statistics.fmean(xs), statistics.fmean(ys)
    den = sum((x - mx) ** 2 for x in xs)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den if den else 0.0


def collect(sizes, budgets, repeats, scaling_k=3, budget_n=50) -> list[dict]:
    rows = []
    for n in sizes:
        rows += [run_one(n, scaling_k, s) for s in range(repeats)]
    for k in budgets:
        if k == scaling_k and budget_n in sizes:
            continue
        rows += [run_one(budget_n, k, s) for s in range(repeats)]
    return rows


def write_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        w.writerows(rows)


def plot(rows, out_dir, scaling_k=3, budget_n=50) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []
    by_n: dict[int, list[float]] = {}
    for r in rows:
        if r["k"] == scaling_k:
            by_n.setdefault(r["n"], []).append(r["seconds"])
    ns = sorted(by_n)
    med = [statistics.median(by_n[n]) for n in ns]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(ns, med, "o-", label="median")
    for n in ns:
        ax.scatter([n] * len(by_n[n]), by_n[n], s=8, alpha=0.4, color="gray")
    if len(ns) > 1:
        ax.set_title(f"k = {scaling_k}, fitted exponent {fit_exponent(ns, med):.2f}")
    ax.set_xlabel("vertices")
    ax.set_ylabel("solve time (s)")
    ax.legend()
    fig.tight_layout()
    p = os.path.join(out_dir, "time_vs_n.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    by_k: dict[int, list[int]] = {}
    for r in rows:
        if r["n"] == budget_n:
            by_k.setdefault(r["k"], []).append(r["nodes"])
    ks = sorted(by_k)
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.boxplot([by_k[k] for k in ks], tick_labels=[str(k) for k in ks])
    ax.set_yscale("symlog")
    ax.set_xlabel("budget k")
    ax.set_ylabel("search nodes")
    ax.set_title(f"n = {budget_n}")
    fig.tight_layout()
    p = os.path.join(out_dir, "nodes_vs_k.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)
    return paths


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = argparse.ArgumentParser(prog="chordedit-report")
    ap.add_argument("--out", default="report")
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--budgets", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args(argv)
    os.makedirs(args.out, exist_ok=True)
    rows = collect(args.sizes, args.budgets, args.repeats)
    csv_path = os.path.join(args.out, "scaling.csv")
    write_csv(rows, csv_path)
    figs = plot(rows, args.out)
    bad = [r for r in rows if r["verdict"] != "feasible"]
    print(f"wrote {csv_path} and {', '.join(figs)}", file=sys.stderr)
    if bad:
        print(f"{len(bad)} planted instance(s) reported infeasible", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

#!/usr/bin/env python3
"""Benchmark sweep over the three instance families, written as CSV.

Defaults are desk-scale (a few minutes); pass --full for the larger
sweep with n up to 200 random-DAG nodes and 50x50 grids.

Usage:
    python3 scripts/run_benchmarks.py --out results/
    python3 scripts/run_benchmarks.py --full --out results/
"""

import argparse
import os

from ordpaths.cli import ExperimentSpec, run_bench, write_csv

DESK = [
    ExperimentSpec(family="random-dag", ns=(25, 50), ks=(2, 10),
                   ps=(0.2, 0.6), seeds=10, variants=("mod1", "mod2")),
    ExperimentSpec(family="grid", widths=(10, 20), heights=(10, 20),
                   ks=(2, 10), seeds=10, variants=("mod1", "mod2")),
    ExperimentSpec(family="exponential", ns=(4, 7, 10, 13, 16, 19),
                   level=1, variants=("mod1", "mod2")),
]

FULL = [
    ExperimentSpec(family="random-dag", ns=(25, 50, 100, 200), ks=(2, 10),
                   ps=(0.2, 0.6), seeds=10, variants=("mod1", "mod2")),
    ExperimentSpec(family="grid", widths=(10, 20, 30, 50),
                   heights=(10, 20, 30, 50), ks=(2, 10), seeds=5,
                   variants=("mod2",)),
    ExperimentSpec(family="exponential", ns=tuple(range(4, 32, 3)),
                   level=1, variants=("mod1", "mod2")),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results",
                    help="output directory for the CSV files")
    ap.add_argument("--full", action="store_true",
                    help="run the larger sweep (tens of minutes)")
    ap.add_argument("--paper-style", action="store_true",
                    help="mask wall times below 0.1 s as `0.1*`")
    args = ap.parse_args()

    os.makedirs(args.out, exist_ok=True)
    for spec in FULL if args.full else DESK:
        rows = run_bench(spec)
        path = os.path.join(args.out, f"bench_{spec.family}.csv")
        with open(path, "w", newline="") as fh:
            write_csv(rows, fh, paper_style=args.paper_style)
        print(f"{spec.family}: {len(rows)} rows -> {path}")


if __name__ == "__main__":
    main()

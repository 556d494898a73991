#!/usr/bin/env python3
"""Wall-time scaling of the boosted pipeline with network size.

Generates planted networks at a sequence of sizes, times one boosted run
on each, and fits a log-log slope.  Louvain itself is near-linear, so the
pipeline should stay well under quadratic.

Example:
  python3 scripts/scaling_benchmark.py --sizes 1000,4000,16000 --out scaling.csv
"""

import argparse
import csv
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import numpy as np

import edgeboost as eb


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,4000,16000")
    ap.add_argument("--iterations", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="optional CSV path")
    args = ap.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]

    rows = []
    for n in sizes:
        net = eb.generate(eb.BenchmarkSpec(n_nodes=n, seed=args.seed))
        cfg = eb.BoostConfig(
            detector=eb.DetectorKind.LOUVAIN,
            n_iterations=args.iterations,
            master_seed=args.seed + 1,
        )
        started = time.perf_counter()
        res = eb.run(net.graph, cfg)
        elapsed = time.perf_counter() - started
        rows.append((n, net.graph.m, elapsed))
        print(f"n={n} m={net.graph.m}: {elapsed:.2f}s "
              f"({res.final_partition.n_communities} communities)",
              file=sys.stderr)

    slope = float(np.polyfit(np.log([r[0] for r in rows]),
                             np.log([r[2] for r in rows]), 1)[0])
    print(f"log-log slope: {slope:.2f}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n_nodes", "n_edges", "boost_seconds"])
            writer.writerows(rows)


if __name__ == "__main__":
    main()

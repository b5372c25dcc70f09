#!/usr/bin/env python3
"""Run a large random-bipartite conjecture batch and write the CSV.

Example:
    python scripts/run_conjectures.py --count 2000 --seed 7 --out batch.csv
"""

import argparse
import sys
import time

from symedge.harness import batch_to_csv, run_conjecture_batch


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--min-vertices", type=int, default=6)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument("--edge-prob", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-", help="output file, - for stdout")
    args = ap.parse_args()

    started = time.time()
    records, summary = run_conjecture_batch(
        args.count, args.min_vertices, args.max_vertices, args.edge_prob, args.seed
    )
    text = batch_to_csv(records, summary)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(
        f"done: {summary['graphs']} graphs in {time.time() - started:.1f}s, "
        f"degree violations {summary['degree_violations']}, "
        f"minimality violations {summary['minimality_violations']}, "
        f"collision inconsistencies {summary['collision_inconsistencies']}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())

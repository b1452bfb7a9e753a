#!/usr/bin/env python3
"""Sweep code rates and emit one CSV line per configuration.

Example:
    python scripts/bench_sweep.py --r 8
    python scripts/bench_sweep.py --r 16 --k 4096 8192 16384 32768
"""

import argparse
import sys

from binfec.bench import CSV_HEADER, run_bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=8, choices=(8, 16))
    parser.add_argument("--k", type=int, nargs="*", default=None,
                        help="k values to sweep (default: powers of two up to n/2)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    n = 1 << args.r
    ks = args.k or [1 << i for i in range(1, args.r)]
    print(CSV_HEADER)
    for k in ks:
        if not 1 <= k < n:
            print(f"skipping k={k}: outside (0, {n})", file=sys.stderr)
            continue
        print(run_bench(r=args.r, k=k, seed=args.seed).csv_line(), flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())

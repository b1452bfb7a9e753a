#!/usr/bin/env python3
"""Tabulate measured transform operation counts against the closed forms.

For every transform size the butterfly schedule should cost exactly
h lg h additions and (h/2) lg h multiplications with a shift outside
the point set, dropping by h - 1 of each when the shift is zero.  The
derivative's multiplication budget (2h) is reported alongside.
"""

import argparse
import random
import sys

from binfec.basis import build_basis_tables
from binfec.derivative import derivative_fast
from binfec.field import tables_for
from binfec.transform import CoeffVec, OpCounter, forward_counted


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=16, choices=(8, 16))
    parser.add_argument("--max-lg", type=int, default=12,
                        help="largest lg(h) to report (default 12)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    ft = tables_for(args.r)
    max_lg = min(args.max_lg, args.r)
    bt = build_basis_tables(ft, 1 << max_lg)
    rng = random.Random(args.seed)

    print(f"{'h':>6} {'adds':>9} {'A(h)':>9} {'muls':>9} {'M(h)':>9} "
          f"{'adds(l=0)':>10} {'A0(h)':>9} {'muls(l=0)':>10} {'M0(h)':>9} "
          f"{'deriv muls':>11} {'2h':>7}")
    exact = True
    for lg in range(1, max_lg + 1):
        h = 1 << lg
        d = CoeffVec([rng.randrange(ft.order) for _ in range(h)])
        # any shift h or beyond misses every block start; at full field
        # size an odd shift does the same
        no_skip_shift = h if h < ft.order else ft.order - 1
        _, ops = forward_counted(bt, d, no_skip_shift)
        _, ops0 = forward_counted(bt, d, 0)
        dops = OpCounter()
        derivative_fast(bt, d, dops)
        a, m = h * lg, h // 2 * lg
        a0, m0 = a - h + 1, m - h + 1
        exact &= (ops.adds, ops.muls, ops0.adds, ops0.muls) == (a, m, a0, m0)
        exact &= dops.muls <= 2 * h
        print(f"{h:>6} {ops.adds:>9} {a:>9} {ops.muls:>9} {m:>9} "
              f"{ops0.adds:>10} {a0:>9} {ops0.muls:>10} {m0:>9} "
              f"{dops.muls:>11} {2 * h:>7}")
    print("all counts exact" if exact else "COUNT MISMATCH")
    return 0 if exact else 1


if __name__ == "__main__":
    sys.exit(main())

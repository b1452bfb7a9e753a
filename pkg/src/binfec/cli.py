"""Command-line tool: shard files with erasure coding and rebuild them.

Subcommands:

    encode    split a file into n = 2^r shard files, any k of which
              can rebuild it
    decode    rebuild the original file from a directory of shards
    selftest  run the built-in consistency suites
    bench     time encode/decode for one configuration and print a CSV
              line with field-operation counts
"""

from __future__ import annotations

import argparse
import glob
import os
import sys

import numpy as np

from .basis import build_basis_tables
from .batch import BatchCodec
from .bench import CSV_HEADER, run_bench
from .field import DEFAULT_POLY, tables_for
from .rs import CodeParams
from .selftest import run_selftest
from .shardfile import (
    InsufficientShardsError,
    SHARD_SUFFIX,
    ShardFormatError,
    ShardHeader,
    bytes_to_stripes,
    read_shards,
    stripes_to_bytes,
    write_shards,
)


def _cmd_encode(args: argparse.Namespace) -> int:
    r, k = args.r, args.k
    if k < 1 or k & (k - 1) or k >= (1 << r):
        raise ValueError(f"k must be a power of two below {1 << r}, got {k}")
    with open(args.input, "rb") as fh:
        data = fh.read()

    cp = CodeParams(r, k)
    ft = tables_for(r)
    bt = build_basis_tables(ft, cp.n)
    header = ShardHeader(r=r, log2_k=k.bit_length() - 1, shard_index=0,
                         original_length=len(data),
                         reduction_poly=DEFAULT_POLY[r])

    stripes = bytes_to_stripes(data, k, r)
    codewords = (BatchCodec(cp, bt).encode(stripes) if len(stripes)
                 else np.empty((0, cp.n), dtype=np.uint16))
    paths = write_shards(args.outdir, header, codewords)
    print(f"wrote {len(paths)} shards ({len(stripes)} stripes, k={k}, n={cp.n}) "
          f"to {args.outdir}")
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    paths = sorted(glob.glob(os.path.join(args.shards, "*" + SHARD_SUFFIX)))
    header, columns, skipped = read_shards(paths)
    for note in skipped:
        print(f"warning: skipping {note}", file=sys.stderr)

    n, k = header.n, header.k
    if len(columns) < k:
        raise InsufficientShardsError(
            f"have {len(columns)} usable shards, need at least {k}")

    stripes = header.stripe_count
    if stripes == 0:
        data = b""
    elif all(j in columns for j in range(k)):
        matrix = np.column_stack([columns[j] for j in range(k)])
        data = stripes_to_bytes(matrix, header.r, header.original_length)
    else:
        cp = CodeParams(header.r, k)
        ft = tables_for(header.r, header.reduction_poly)
        bt = build_basis_tables(ft, n)
        received = np.zeros((stripes, n), dtype=np.uint16)
        for j, col in columns.items():
            received[:, j] = col
        erased = {j for j in range(n) if j not in columns}
        messages = BatchCodec(cp, bt).decode(received, erased)
        data = stripes_to_bytes(messages, header.r, header.original_length)

    with open(args.output, "wb") as fh:
        fh.write(data)
    print(f"reconstructed {len(data)} bytes from {len(columns)} shards "
          f"to {args.output}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    return 1 if run_selftest() else 0


def _cmd_bench(args: argparse.Namespace) -> int:
    result = run_bench(r=args.r, k=args.k, size=args.size, seed=args.seed)
    print(f"encode: {result.encode_s:.3f} s for {result.stripes} stripe(s), "
          f"(n,k)=({result.n},{result.k})")
    print(f"decode: {result.decode_s:.3f} s with {result.n - result.k} erasures")
    print(CSV_HEADER)
    print(result.csv_line())
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="binfec",
        description="Erasure-code files into shards; any k of n rebuild the original.")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="split a file into shards")
    enc.add_argument("--in", dest="input", required=True, metavar="FILE")
    enc.add_argument("--out", dest="outdir", required=True, metavar="DIR")
    enc.add_argument("--r", type=int, default=8, choices=(8, 16),
                     help="field width; n = 2^r shards (default 8)")
    enc.add_argument("--k", type=int, default=128,
                     help="data shards, a power of two below 2^r (default 128)")
    enc.set_defaults(func=_cmd_encode)

    dec = sub.add_parser("decode", help="rebuild a file from shards")
    dec.add_argument("--shards", required=True, metavar="DIR")
    dec.add_argument("--out", dest="output", required=True, metavar="FILE")
    dec.set_defaults(func=_cmd_decode)

    st = sub.add_parser("selftest", help="run built-in consistency suites")
    st.set_defaults(func=_cmd_selftest)

    ben = sub.add_parser("bench", help="time encode/decode for one configuration")
    ben.add_argument("--r", type=int, default=16, choices=(8, 16))
    ben.add_argument("--k", type=int, default=None,
                     help="data symbols per codeword (default n/2)")
    ben.add_argument("--size", type=int, default=None, metavar="BYTES",
                     help="payload size (default: one stripe)")
    ben.add_argument("--seed", type=int, default=0)
    ben.set_defaults(func=_cmd_bench)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, InsufficientShardsError, ShardFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

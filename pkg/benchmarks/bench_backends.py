#!/usr/bin/env python3
"""Compiled vs pure-Python kernels on the same seeded corpora.

Prints TSV: backend, engine, n, p, k, nanoseconds (median of --runs).
The full-table engine is skipped for the pure backend above --full-limit
cells since it takes minutes there.
"""

import argparse
import logging

from periodrec import _kernels
from periodrec.bench import corpus, time_engine


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="4096,16384,65536", help="comma-separated text lengths")
    parser.add_argument("--p", type=int, default=64)
    parser.add_argument("--k", type=int, default=8)
    parser.add_argument("--runs", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--full-limit", type=int, default=2_000_000,
                        help="max (n+1)*p cells for the pure full-table engine (default: %(default)d)")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO)

    if "compiled" not in _kernels.BACKENDS:
        logging.warning("extension not built; only the pure backend is timed")
    print("backend\tengine\tn\tp\tk\tnanoseconds")
    for n in (int(x) for x in args.sizes.split(",")):
        text, word = corpus(n, args.p, seed=args.seed)
        for backend in sorted(_kernels.BACKENDS):
            for engine in ("kangaroo", "full"):
                if backend == "pure" and engine == "full" and (n + 1) * args.p > args.full_limit:
                    logging.info("skip pure/full at n=%d", n)
                    continue
                ns = time_engine(engine, text, word, args.k, args.runs, backend)
                print(f"{backend}\t{engine}\t{n}\t{args.p}\t{args.k}\t{ns}", flush=True)


if __name__ == "__main__":
    main()

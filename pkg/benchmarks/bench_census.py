#!/usr/bin/env python3
"""Compare the numba-compiled census kernel against the pure-Python path.

Runs the full sweep of one dimension through both implementations and
prints throughput.  The jitted function gets a warmup call so
compilation time is not counted.

Usage: python benchmarks/bench_census.py [--dim N] [--repeat K]
"""

import argparse
import time

import numpy as np

from rbott import _kernels
from rbott.census import MISMATCH_CAP, free_bit_count


def time_kernel(fn, n, total, repeat):
    best = float("inf")
    for _ in range(repeat):
        mis = np.zeros(MISMATCH_CAP, dtype=np.int64)
        t0 = time.perf_counter()
        counts, _ = fn(n, 0, total, True, mis, MISMATCH_CAP)
        best = min(best, time.perf_counter() - t0)
    return best, counts


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dim", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    n = args.dim
    total = 1 << free_bit_count(n)
    print(f"dimension {n}: {total} matrices, oracle enabled")

    if _kernels.BACKEND != "numba":
        print("numba backend not active (RBOTT_NO_NUMBA set or numba missing);")
        print("timing the pure path only.")
        jitted = None
    else:
        jitted = _kernels.census_range
        # warmup / compile
        mis = np.zeros(MISMATCH_CAP, dtype=np.int64)
        jitted(n, 0, min(total, 64), True, mis, MISMATCH_CAP)

    pure_t, pure_counts = time_kernel(
        _kernels._census_range_impl, n, total, args.repeat
    )
    print(f"pure python : {pure_t:8.3f}s  ({total / pure_t:12.0f} matrices/s)")

    if jitted is not None:
        numba_t, numba_counts = time_kernel(jitted, n, total, args.repeat)
        print(f"numba       : {numba_t:8.3f}s  ({total / numba_t:12.0f} matrices/s)")
        print(f"speedup     : {pure_t / numba_t:8.1f}x")
        assert list(pure_counts) == list(numba_counts), "backends disagree"
    print(f"counts      : {[int(c) for c in pure_counts]}")


if __name__ == "__main__":
    main()

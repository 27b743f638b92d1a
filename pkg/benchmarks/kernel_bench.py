"""Times the pure-Python histogram kernel against the compiled one.

Both engines enumerate every factorization of a k-cycle, so the cost grows
like k! and a few extra units of k separate the engines clearly.  The two
tables are compared entry by entry before any timing is reported.

Run from the repository root after an editable install:

    python3 benchmarks/kernel_bench.py --k-min 5 --k-max 9
"""

from __future__ import annotations

import argparse
import sys
import time

from rectchar import _pykernel

try:
    from rectchar import _cykernel
except ImportError:
    _cykernel = None


def cycle_word(k: int) -> list[int]:
    return [(i + 1) % k for i in range(k)]


def best_time(func, word, repeats: int) -> tuple[float, list[list[int]]]:
    table = func(word)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func(word)
        best = min(best, time.perf_counter() - start)
    return best, table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="benchmark the factorization histogram kernels")
    parser.add_argument("--k-min", type=int, default=5)
    parser.add_argument("--k-max", type=int, default=9)
    parser.add_argument("--repeats", type=int, default=3,
                        help="timed runs per engine; the best one counts")
    args = parser.parse_args(argv)
    if not 1 <= args.k_min <= args.k_max:
        parser.error("need 1 <= k-min <= k-max")
    if args.k_max > 11:
        parser.error("k-max above 11 would take minutes per run")

    if _cykernel is None:
        print("compiled extension not built; timing the Python engine only")
        print(f"{'k':>3} {'python_ms':>12}")
        for k in range(args.k_min, args.k_max + 1):
            seconds, _ = best_time(
                _pykernel.factorization_histogram, cycle_word(k), args.repeats)
            print(f"{k:>3} {seconds * 1e3:>12.3f}")
        return 0

    print(f"{'k':>3} {'python_ms':>12} {'cython_ms':>12} {'speedup':>9}")
    for k in range(args.k_min, args.k_max + 1):
        word = cycle_word(k)
        py_s, py_table = best_time(
            _pykernel.factorization_histogram, word, args.repeats)
        cy_s, cy_table = best_time(
            _cykernel.factorization_histogram, word, args.repeats)
        if py_table != [list(row) for row in cy_table]:
            print(f"kernel disagreement at k={k}", file=sys.stderr)
            return 1
        print(f"{k:>3} {py_s * 1e3:>12.3f} {cy_s * 1e3:>12.3f} "
              f"{py_s / cy_s:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

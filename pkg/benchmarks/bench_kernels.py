#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths (draining the free-tree stream, and the per-cell
family sweep used by the verifier) for a range of orders and prints the
speedups.  Run from an installed checkout:

    python benchmarks/bench_kernels.py --orders 12 14 16 --repeat 3
"""

import argparse
import time

from sombor_trees._kernels import pure
from sombor_trees.extremal import feasible_alpha_range

try:
    from sombor_trees._kernels import _speedups as compiled
except ImportError:
    compiled = None


def time_enumerate(mod, n, repeat):
    best = float("inf")
    count = 0
    for _ in range(repeat):
        start = time.perf_counter()
        count = sum(1 for _ in mod.iter_level_sequences(n))
        best = min(best, time.perf_counter() - start)
    return best, count


def time_sweep(mod, n, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for alpha in feasible_alpha_range(n):
            mod.family_sweep(n, alpha)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[12, 14, 16])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if compiled is None:
        print("compiled backend unavailable; timing the pure backend only")

    header = f"{'n':>3} {'trees':>8} {'enum pure':>11} {'sweep pure':>11}"
    if compiled is not None:
        header += f" {'enum comp':>11} {'sweep comp':>11} {'enum x':>7} {'sweep x':>8}"
    print(header)
    for n in args.orders:
        ep, count = time_enumerate(pure, n, args.repeat)
        sp = time_sweep(pure, n, args.repeat)
        row = f"{n:>3} {count:>8} {ep:>10.4f}s {sp:>10.4f}s"
        if compiled is not None:
            ec, ccount = time_enumerate(compiled, n, args.repeat)
            sc = time_sweep(compiled, n, args.repeat)
            assert ccount == count, "backends disagree on the tree count"
            row += f" {ec:>10.4f}s {sc:>10.4f}s {ep / ec:>6.1f}x {sp / sc:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()

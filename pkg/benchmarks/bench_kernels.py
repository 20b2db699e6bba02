#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from rskforge.kernels import _pure

try:
    from rskforge.kernels import _fast
except ImportError:
    _fast = None


def timed(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_shapes(impl, perms):
    for p in perms:
        impl.rsk_shape_of(p)


def bench_census(impl, n):
    for first in range(1, n + 1):
        impl.census_shard(n, first)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    rng = random.Random(12345)
    sizes = [(2000, 50), (500, 200)] if args.quick else [(10000, 50), (2000, 200)]
    census_n = 7 if args.quick else 8

    workloads = []
    for count, size in sizes:
        perms = []
        for _ in range(count):
            vals = list(range(1, size + 1))
            rng.shuffle(vals)
            perms.append(tuple(vals))
        workloads.append(
            (f"rsk_shape_of x{count} (n={size})", lambda impl, ps=perms: bench_shapes(impl, ps))
        )
    workloads.append(
        (f"census S_{census_n} (all shards)", lambda impl: bench_census(impl, census_n))
    )

    print(f"{'workload':<34} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, work in workloads:
        pure_t = timed(lambda: work(_pure), repeat=2)
        if _fast is None:
            print(f"{name:<34} {pure_t:>9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        fast_t = timed(lambda: work(_fast), repeat=2)
        print(f"{name:<34} {pure_t:>9.3f}s {fast_t:>9.3f}s {pure_t / fast_t:>8.1f}x")

    if _fast is None:
        print("\ncompiled kernel not built; showing pure timings only")


if __name__ == "__main__":
    main()

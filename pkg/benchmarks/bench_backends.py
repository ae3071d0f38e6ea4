#!/usr/bin/env python3
"""Timing comparison between the pure-Python and compiled kernels.

Runs each workload on both backends (when the compiled extension is
built) and reports best-of-N wall times plus the speedup.  Workloads are
chosen to exercise the four hot paths: dense construction, bit packing,
virtual window extraction, single-element descent, and the subset search.

Usage:
    python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from pteseq import _backend
from pteseq._backend import pure

compiled = _backend.compiled


def best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_materialize(mod):
    mod.materialize_codes(20)  # 873 814 elements


def bench_pack_unpack(mod, codes):
    packed = mod.pack_codes(codes)
    mod.unpack_codes(packed, len(codes))


def bench_extract(mod):
    # 64 KiB windows from a sequence near a billion elements long.
    for start in (0, 10**8 + 13, 4 * 10**8 + 7):
        mod.extract_codes(30, start, start + 65536)


def bench_code_at(mod):
    step = pure.sequence_lengths(40)[-1] // 10_000
    for i in range(10_000):
        mod.code_at(40, i * step)


def bench_search(mod):
    mod.search_pairs(0, 17, 3, 2)
    mod.search_pairs(0, 20, 4, 3)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeat",
        type=int,
        default=5,
        help="runs per workload; the best time wins (default: 5)",
    )
    args = parser.parse_args()

    codes = pure.materialize_codes(20)
    workloads = [
        ("materialize n=20", bench_materialize, ()),
        ("pack+unpack 873k codes", bench_pack_unpack, (codes,)),
        ("extract 3x64KiB from n=30", bench_extract, ()),
        ("code_at 10k probes on n=40", bench_code_at, ()),
        ("search [0,17] m=3 d=2 + [0,20] m=4 d=3", bench_search, ()),
    ]

    if compiled is None:
        print("compiled kernels not built; timing the pure backend only\n")
        print(f"{'workload':<42}{'pure':>12}")
        for name, fn, extra in workloads:
            t = best_of(args.repeat, fn, pure, *extra)
            print(f"{name:<42}{t * 1e3:>10.2f}ms")
        return

    print(f"{'workload':<42}{'pure':>12}{'compiled':>12}{'speedup':>9}")
    for name, fn, extra in workloads:
        t_pure = best_of(args.repeat, fn, pure, *extra)
        t_comp = best_of(args.repeat, fn, compiled, *extra)
        ratio = t_pure / t_comp if t_comp else float("inf")
        print(
            f"{name:<42}{t_pure * 1e3:>10.2f}ms{t_comp * 1e3:>10.2f}ms"
            f"{ratio:>8.1f}x"
        )


if __name__ == "__main__":
    main()

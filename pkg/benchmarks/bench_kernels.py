"""Time the numba and numpy sweep kernels on the same mask ranges.

    python3 benchmarks/bench_kernels.py [--split 4 5] [--repeat 3]

Each backend runs once untimed (numba compiles or loads its cache), then the
best of ``--repeat`` runs is reported together with a bit-equality check.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bipzagreb import _kernels
from bipzagreb.oracle import code_summary


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--split", nargs=2, type=int, default=[4, 5], metavar=("P", "Q"))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    p, q = args.split
    total = 1 << (p * q)

    backends = ["numpy"] + (["numba"] if _kernels.NUMBA_AVAILABLE else [])
    results = {}
    print(f"split ({p}, {q}): {total} edge subsets")
    for b in backends:
        results[b] = _kernels.sweep(p, q, 0, total, b)
        secs = best_of(lambda: _kernels.sweep(p, q, 0, total, b), args.repeat)
        print(f"  {b:6s} {secs:8.3f} s   {total / secs / 1e6:8.2f} M subsets/s")
    if len(results) == 2:
        print(f"  identical codes: {np.array_equal(results['numpy'], results['numba'])}")

    n = p + q
    for b in backends:
        code_summary.cache_clear()
        secs = best_of(lambda: code_summary(n, b), 1)
        print(f"full order-{n} summary with {b}: {secs:.3f} s")


if __name__ == "__main__":
    main()

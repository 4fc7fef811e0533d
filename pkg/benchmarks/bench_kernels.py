"""Compare the numpy and numba kernel backends on the hot paths.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]

Times series_sum and quad_level on representative workloads with both
backends and reports per-call timings plus the worst value disagreement.
The first numba call includes JIT compilation and is excluded by warmup.
"""

from __future__ import annotations

import argparse
import time

from lerchsum import backend

SERIES_WORK = [
    (0.5 + 0.0j, 1.0 + 0.0j, 1.0 + 0.0j, 1e-12, 10**6),
    (0.3 + 0.2j, -1.5 + 0.0j, 0.7 - 0.4j, 1e-12, 10**6),
    (0.72 * complex(0.6, 0.8), 2.0 + 1.0j, 1.5 + 0.5j, 1e-12, 10**6),
    (0.99 + 0.0j, 2.5 + 0.0j, 1.25 + 0.0j, 1e-12, 10**6),
]
QUAD_WORK = [
    (1.0 + 0.0j, 2.0 + 0.0j, 1.0 + 0.0j, 7),
    (-1.0 + 0.0j, 2.0 + 0.0j, 1.5 + 0.0j, 7),
    (0.5 - 0.8660254037844386j, 2.0 + 0.0j, 1.5 + 0.0j, 8),
    (0.99 + 0.0j, 2.5 + 0.0j, 1.25 + 0.0j, 8),
]


def _time(fn, work, repeats):
    for args in work:  # warmup (numba JIT, caches)
        fn(*args)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in work:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best / len(work)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    backends = {}
    backends["numpy"] = backend._load("numpy")[0]
    try:
        backends["numba"] = backend._load("numba")[0]
    except ImportError:
        print("numba not importable; benchmarking numpy backend only")

    results = {}
    for name, mod in backends.items():
        results[name] = {
            "series": _time(mod.series_sum, SERIES_WORK, args.repeats),
            "quad": _time(mod.quad_level, QUAD_WORK, args.repeats),
        }

    print(f"{'backend':<8} {'series_sum (us/call)':>22} {'quad_level (us/call)':>22}")
    for name, r in results.items():
        print(f"{name:<8} {r['series'] * 1e6:>22.1f} {r['quad'] * 1e6:>22.1f}")
    if len(backends) == 2:
        for kernel in ("series", "quad"):
            speedup = results["numpy"][kernel] / results["numba"][kernel]
            print(f"numba speedup on {kernel}: {speedup:.2f}x")
        worst = 0.0
        for z, s, v, tol, nmax in SERIES_WORK:
            a = backends["numpy"].series_sum(z, s, v, tol, nmax)[0]
            b = backends["numba"].series_sum(z, s, v, tol, nmax)[0]
            worst = max(worst, abs(a - b))
        for z, s, v, level in QUAD_WORK:
            a = backends["numpy"].quad_level(z, s, v, level)[0]
            b = backends["numba"].quad_level(z, s, v, level)[0]
            worst = max(worst, abs(a - b))
        print(f"worst backend disagreement: {worst:.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

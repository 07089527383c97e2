"""Timing comparison of the three scan backends (numba, numpy, exact).

Runs every hot kernel on a representative workload under each backend,
checks that all backends return identical results, and prints a table of
best-of-N wall times with speedups relative to the exact (pure Python)
baseline.  The numba backend is warmed up once per kernel before timing
so JIT compilation is reported separately, not folded into the runs.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat 3] [--backends numba,numpy,exact]

Workload sizes are chosen so the exact baseline stays in the seconds
range; the fast backends are typically one to three orders of magnitude
faster on the same inputs.
"""

from __future__ import annotations

import argparse
import time

from thue1728 import kernels

WORKLOADS = [
    (
        "pell_scan       D=13, k=-29, y <= 10^6",
        lambda b: kernels.pell_scan(13, -29, 10**6, backend=b),
    ),
    (
        "quartic_scan    D=2, k=-1, y <= 10^4",
        lambda b: kernels.quartic_scan(2, -1, 10**4, backend=b),
    ),
    (
        "quartic_scan    D=61, k=-29, y <= 3*10^4",
        lambda b: kernels.quartic_scan(61, -29, 3 * 10**4, backend=b),
    ),
    (
        "curve_scan      N=210, |X| <= 10^6",
        lambda b: kernels.curve_scan(210, -(10**6), 10**6, backend=b),
    ),
    (
        "unit_scan       D=94, U <= 10^6",
        lambda b: kernels.unit_scan(94, 10**6, backend=b),
    ),
    (
        "thue_scan       (1,-4,-6,4,1), h=4, box=600",
        lambda b: kernels.thue_scan((1, -4, -6, 4, 1), 4, 600, backend=b),
    ),
    (
        "ternary_scan    x^2 = 3y^2 + 17z^2, y,z <= 1500",
        lambda b: kernels.ternary_negx_scan(3, 17, 1500, 1500, backend=b),
    ),
]


def _time_best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="runs per cell, best kept")
    ap.add_argument(
        "--backends",
        default="numba,numpy,exact",
        help="comma-separated subset of numba,numpy,exact",
    )
    args = ap.parse_args()
    backends = [b.strip() for b in args.backends.split(",") if b.strip()]
    for b in backends:
        if b not in ("numba", "numpy", "exact"):
            ap.error(f"unknown backend {b!r}")

    if "numba" in backends:
        t0 = time.perf_counter()
        for _, fn in WORKLOADS:
            fn("numba")
        print(f"numba warm-up (includes JIT compilation): {time.perf_counter() - t0:.2f} s")
        print()

    header = f"{'workload':<44}" + "".join(f"{b:>12}" for b in backends)
    if "exact" in backends and len(backends) > 1:
        header += f"{'best speedup':>14}"
    print(header)
    print("-" * len(header))

    for label, fn in WORKLOADS:
        results = {}
        times = {}
        for b in backends:
            results[b] = fn(b)
            times[b] = _time_best(lambda: fn(b), args.repeat)
        baseline = next(iter(results.values()))
        for b, r in results.items():
            if r != baseline:
                raise AssertionError(f"backend disagreement on {label}: {b}")
        row = f"{label:<44}" + "".join(f"{times[b]:>10.4f} s" for b in backends)
        if "exact" in backends and len(backends) > 1:
            fastest = min(t for b, t in times.items() if b != "exact")
            row += f"{times['exact'] / max(fastest, 1e-9):>13.1f}x"
        print(row)
    print()
    print("all backends returned identical results on every workload")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

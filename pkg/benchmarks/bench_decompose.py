#!/usr/bin/env python3
"""Benchmark the decomposition-scan backends (numba njit vs pure numpy).

Runs the same exhaustive cube-plus-square scans through both code paths and
reports timings plus an agreement check.  The numpy path here is the same
code selected at import time by CUBESQUARE_NO_NUMBA=1.

Usage: python benchmarks/bench_decompose.py [--repeat N]
"""

import argparse
import time

import numpy as np

from cubesquare import _kernels

CASES = [
    # (label, q, degree of f, descending coefficients of the target form)
    ("deg-12 scan, q=7", 7, 4, [1] + [0] * 11 + [1]),
    ("deg-12 scan, q=11", 11, 4, [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9]),
    ("deg-12 scan, q=13", 13, 4, [1] + [0] * 11 + [1]),
    ("sextic scan, q=101", 101, 2, [17, 0, 3, 55, 0, 9, 100]),
]


def run_numba(q, coeffs, d):
    if not _kernels.USE_NUMBA:
        return None, None
    t0 = time.perf_counter()
    out = _kernels.decompose_scan(q, coeffs, d)
    return time.perf_counter() - t0, out


def run_numpy(q, coeffs, d):
    table = _kernels.sqrt_table(q)
    F = np.asarray(coeffs, dtype=np.int64)
    t0 = time.perf_counter()
    out = []
    total = q ** (d + 1)
    for start in range(0, total, _kernels._NUMPY_CHUNK):
        out.extend(
            _kernels._scan_numpy(q, F, d, start, min(start + _kernels._NUMPY_CHUNK, total), table)
        )
    out.sort()
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels.USE_NUMBA:
        # absorb the one-time JIT cost outside the timings
        _kernels.decompose_scan(5, [1] + [0] * 11 + [1], 4)
        _kernels.decompose_scan(5, [1, 0, 0, 0, 0, 0, 1], 2)
        print("numba backend available: yes (JIT warmed)")
    else:
        print("numba backend available: no (CUBESQUARE_NO_NUMBA set or import failed)")
    print(f"{'case':24s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}  agree")
    for label, q, d, coeffs in CASES:
        tn = tp = None
        hits_n = hits_p = None
        for _ in range(args.repeat):
            t, out = run_numba(q, coeffs, d)
            if t is not None and (tn is None or t < tn):
                tn, hits_n = t, out
            t, out = run_numpy(q, coeffs, d)
            if tp is None or t < tp:
                tp, hits_p = t, out
        agree = "-" if hits_n is None else str(hits_n == hits_p)
        ncol = "-" if tn is None else f"{tn * 1000:8.1f}ms"
        speed = "-" if tn is None else f"{tp / tn:8.1f}x"
        print(f"{label:24s} {ncol:>10s} {tp * 1000:8.1f}ms {speed:>9s}  {agree}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled realization-enumeration kernel against the
pure-Python twin, asserting identical output along the way.

Usage: python3 benchmarks/bench_enum.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from raowqo import _enum_py

try:
    from raowqo import _enum_cy
except ImportError:
    _enum_cy = None

CASES = [
    ("3-regular on 8", (3, 3, 3, 3, 3, 3, 3, 3)),
    ("2-regular on 10", (2, 2, 2, 2, 2, 2, 2, 2, 2, 2)),
    ("4-regular on 7", (4, 4, 4, 4, 4, 4, 4)),
    ("mixed on 9", (5, 4, 4, 3, 3, 2, 2, 2, 1)),
    ("near-complete on 7", (6, 5, 5, 4, 4, 3, 3)),
]


def timed(fn, degrees, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(degrees)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _enum_cy is None:
        print("compiled kernel unavailable; timing pure Python only")
    header = f"{'case':<22}{'graphs':>8}{'python':>12}{'cython':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, degrees in CASES:
        py_out, py_t = timed(_enum_py.realizations, degrees, args.repeat)
        if _enum_cy is not None:
            cy_out, cy_t = timed(_enum_cy.realizations, degrees, args.repeat)
            assert py_out == cy_out, f"kernel outputs diverge on {name}"
            print(
                f"{name:<22}{len(py_out):>8}{py_t * 1000:>10.1f}ms"
                f"{cy_t * 1000:>10.1f}ms{py_t / cy_t:>8.1f}x"
            )
        else:
            print(f"{name:<22}{len(py_out):>8}{py_t * 1000:>10.1f}ms{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()

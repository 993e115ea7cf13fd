"""Compare the pure Python and compiled term kernels on one workload.

Run as: python3 benchmarks/bench_kernel.py [--size N] [--repeat R]

The workload mirrors what the library does most: merging, multiplying
and powering term maps with exact Fraction coefficients.  Both backends
are imported directly, so the WBLOW_PURE switch is irrelevant here.
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from wblow import _kernel_py

try:
    from wblow import _kernel_cy
except ImportError:
    _kernel_cy = None


def build_terms(size: int, seed: int) -> dict:
    rng = random.Random(seed)
    terms = {}
    while len(terms) < size:
        mono = (rng.randrange(0, 9), rng.randrange(0, 9))
        terms[mono] = Fraction(rng.randrange(-40, 40) or 1, rng.randrange(1, 12))
    return terms


def workload(kernel, size: int, repeat: int) -> float:
    a = build_terms(size, seed=11)
    b = build_terms(size, seed=23)
    start = time.perf_counter()
    for _ in range(repeat):
        prod = kernel.mul_terms(a, b)
        cube = kernel.pow_terms(b, 3, 2)
        mixed = kernel.add_terms(prod, kernel.scale_terms(cube, Fraction(-2, 3)))
        kernel.partial_terms(mixed, 0)
        kernel.partial_terms(kernel.neg_terms(mixed), 1)
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=60, help="terms per factor")
    parser.add_argument("--repeat", type=int, default=20, help="workload repeats")
    args = parser.parse_args()

    results = {}
    results["python"] = workload(_kernel_py, args.size, args.repeat)
    if _kernel_cy is None:
        print("compiled kernel not built; only the python timing is shown")
    else:
        results["cython"] = workload(_kernel_cy, args.size, args.repeat)

    for name, seconds in results.items():
        print(f"{name:7s} {seconds * 1000:9.1f} ms")
    if "cython" in results and results["cython"] > 0:
        print(f"speedup {results['python'] / results['cython']:9.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Compare the compiled and pure-Python verification kernels.

Usage: python benchmarks/bench_kernels.py [--r R] [--n N]
"""

import argparse
import time

from grpn._kernels import BACKENDS, get_kernel
from grpn.group import GroupParams, enumerate_group


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=4)
    parser.add_argument("--n", type=int, default=5)
    args = parser.parse_args()

    params = GroupParams(args.r, 1, args.n)
    elements = [(w.perm, w.colors) for w in enumerate_group(params)]
    print(f"G({args.r},1,{args.n}): {len(elements)} elements")

    timings = {}
    for name in sorted(BACKENDS):
        kernel = get_kernel(name)
        start = time.perf_counter()
        for perm, colors in elements:
            kernel(perm, colors, args.r)
        timings[name] = time.perf_counter() - start
        rate = len(elements) / timings[name]
        print(f"  {name:7s} {timings[name] * 1000:9.1f} ms  ({rate:,.0f} elements/s)")

    if "cython" in timings and "python" in timings:
        print(f"  speedup {timings['python'] / timings['cython']:.1f}x")
    else:
        print("  compiled kernel not built; only the pure-Python path was timed")


if __name__ == "__main__":
    main()

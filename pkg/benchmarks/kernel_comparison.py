#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel paths.

Runs the O(n)-space solver and the k-link-path solver over a range of
instance sizes twice: once with numba jit kernels (default) and once with
``BOUNDEDCODE_NO_JIT=1``.  Verifies both paths produce identical length
vectors and reports the speedup.

Usage: python3 benchmarks/kernel_comparison.py [--sizes 1000,10000,100000]
"""

import argparse
import os
import random
import time

from boundedcode import core, linearspace, monge


def build(n, rng):
    weights = [rng.random() + 1e-6 for _ in range(n)]
    n_p = n + core.dummy_count(n, 2)
    lo = 0
    while 2**lo < n_p:
        lo += 1
    return core.problem(weights, radix=2, l_min=0, l_max=lo + 8)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000,100000,500000",
                        help="comma-separated instance sizes")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    # warm the jit compilation cache outside any timed section
    os.environ.pop("BOUNDEDCODE_NO_JIT", None)
    warm = build(64, rng)
    linearspace.solve_linear_space(warm)
    monge.solve_linear_fast(warm)

    header = f"{'n':>8} {'solver':>12} {'jit':>10} {'python':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        spec = build(n, rng)
        for name, fn in (("linear-space", linearspace.solve_linear_space),
                         ("monge", monge.solve_linear_fast)):
            os.environ.pop("BOUNDEDCODE_NO_JIT", None)
            t_jit, r_jit = timed(fn, spec)
            os.environ["BOUNDEDCODE_NO_JIT"] = "1"
            t_py, r_py = timed(fn, spec)
            os.environ.pop("BOUNDEDCODE_NO_JIT", None)
            assert r_jit.padded_lengths == r_py.padded_lengths, (
                f"paths disagree at n={n} for {name}"
            )
            print(f"{n:>8} {name:>12} {t_jit:>9.3f}s {t_py:>9.3f}s "
                  f"{t_py / max(t_jit, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()

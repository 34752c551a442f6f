"""Times the numba kernels against their numpy fallbacks on realistic sizes.

    python3 benchmarks/bench_kernels.py [--repeat 20] [--csv out.csv]

Both tables come from the same process, so ``ASGN_NUMBA`` does not matter
here. The first JIT call (compilation) is excluded and reported separately.
"""

import argparse
import csv
import sys
import time

import numpy as np

from asgn import kernels


def cases(rng):
    n = 10_000
    u = np.sort(rng.standard_normal(n))
    v = np.sort(rng.standard_normal(n) + 0.3)
    w = np.full(n, 1.0 / n)
    U = np.sort(rng.standard_normal((2000, 64)), axis=0)
    V = np.sort(rng.standard_normal((2000, 64)), axis=0)
    W = np.full((2000, 64), 1.0 / 2000)
    grid = np.linspace(-4, 4, 2000)
    pts = rng.uniform(-1.5, 1.5, (10_000, 2))
    ang = 2 * np.pi * np.arange(8) / 8
    centers = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    return {
        "w1_sweep": (u, w, v, w),
        "w1_columns": (U, W, V, W),
        "ecdf": (u, w, grid),
        "assign": (pts, centers, 0.15),
    }


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="also write results here")
    args = p.parse_args(argv)

    rows = []
    for name, a in cases(np.random.default_rng(args.seed)).items():
        jit, ref = kernels.JIT_KERNELS[name], kernels.NUMPY_KERNELS[name]
        t0 = time.perf_counter()
        jit(*a)
        compile_s = time.perf_counter() - t0
        t_jit = best_of(jit, a, args.repeat)
        t_np = best_of(ref, a, args.repeat)
        rows.append((name, compile_s, t_jit, t_np, t_np / t_jit))

    cols = ("kernel", "first_call_s", "jit_s", "numpy_s", "speedup")
    print(f"{cols[0]:<12}{cols[1]:>14}{cols[2]:>12}{cols[3]:>12}{cols[4]:>10}")
    for r in rows:
        print(f"{r[0]:<12}{r[1]:>14.4f}{r[2]:>12.6f}{r[3]:>12.6f}{r[4]:>10.2f}")
    print(f"numba available: {kernels._HAVE_NUMBA}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(cols)
            wr.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())

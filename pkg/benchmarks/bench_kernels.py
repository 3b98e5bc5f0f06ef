"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three twinned kernels on representative workloads (exact
rationals, a prime field, and a nested dual tower), plus one end-to-end
suite run in each backend via subprocess.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time

from jordankit._kernels import pure
from jordankit.randgen import rand_matrix, trial_rng
from jordankit.rings import RATIONAL, DualRing, PrimeFieldRing

try:
    from jordankit._kernels import fast
except ImportError:
    fast = None


def bench(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_rows(repeat):
    cases = {
        "Q": RATIONAL,
        "F5": PrimeFieldRing(5),
        "Q[e][d]": DualRing(DualRing(RATIONAL)),
    }
    rows = []
    for label, ring in cases.items():
        rng = trial_rng(42, 0)
        mats = [(rand_matrix(rng, ring, 4).rows, rand_matrix(rng, ring, 4).rows, ring)
                for _ in range(200)]
        for name, key in (("matmul", None), ("gauss_solve", None)):
            pure_fn = getattr(pure, name)
            t_pure = bench(pure_fn, mats, repeat)
            if fast is not None:
                t_fast = bench(getattr(fast, name), mats, repeat)
            else:
                t_fast = None
            rows.append((f"{name} 4x4 {label}", t_pure, t_fast))
        base_ring = ring
        while isinstance(base_ring, DualRing):
            base_ring = base_ring.base
        rng = trial_rng(42, 1)
        rmats = [(rand_matrix(rng, base_ring, 6, 4).rows, base_ring)
                 for _ in range(200)]
        t_pure = bench(pure.gauss_rank, rmats, repeat)
        t_fast = bench(fast.gauss_rank, rmats, repeat) if fast else None
        rows.append((f"gauss_rank 6x4 {label}", t_pure, t_fast))
    return rows


def suite_row():
    env_fast = dict(os.environ)
    env_fast.pop("JORDANKIT_PURE_KERNELS", None)
    env_pure = dict(os.environ, JORDANKIT_PURE_KERNELS="1")
    cmd = [sys.executable, "-m", "jordankit.cli", "verify", "--suite",
           "fundamental", "--trials", "100", "--seed", "1"]
    times = {}
    for label, env in (("fast", env_fast), ("pure", env_pure)):
        t0 = time.perf_counter()
        subprocess.run(cmd, env=env, check=True, capture_output=True)
        times[label] = time.perf_counter() - t0
    return ("suite fundamental x100 (subprocess)", times["pure"], times["fast"])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if fast is None:
        print("compiled extension not available; timing pure backend only")
    rows = kernel_rows(args.repeat)
    rows.append(suite_row())
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  speedup")
    for name, t_pure, t_fast in rows:
        if t_fast is None:
            print(f"{name:<{width}}  {t_pure * 1e3:8.1f}ms        n/a")
        else:
            print(f"{name:<{width}}  {t_pure * 1e3:8.1f}ms  {t_fast * 1e3:8.1f}ms"
                  f"  {t_pure / t_fast:6.2f}x")


if __name__ == "__main__":
    main()

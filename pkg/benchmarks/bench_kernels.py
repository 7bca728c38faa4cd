#!/usr/bin/env python3
"""Benchmark the compiled reduction kernels against the pure-Python lane.

Times the three reductions on representative shapes (a 40x60 frame
difference is one Monte Carlo trial; the batch shape is one verification
chunk) and, for context, a full verify_tight_minimality run under each
lane via subprocess.

Usage: python benchmarks/bench_kernels.py [--trials 1000]
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import time

import numpy as np

from framekit import _kernels_py as lane_py

try:
    from framekit import _kernels_c as lane_c
except ImportError:
    lane_c = None


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_reductions():
    rng = np.random.default_rng(0)
    a = np.ascontiguousarray(rng.standard_normal(2400) + 1j * rng.standard_normal(2400))
    b = np.ascontiguousarray(rng.standard_normal(2400) + 1j * rng.standard_normal(2400))
    stack = np.ascontiguousarray(
        rng.standard_normal((256, 2400)) + 1j * rng.standard_normal((256, 2400))
    )
    reals = np.ascontiguousarray(rng.standard_normal(40_000))

    cases = [
        ("comp_sum (40k float64)", lambda lane: lane.comp_sum(reals), 20),
        ("sq_abs_sum (2400 c128)", lambda lane: lane.sq_abs_sum(a), 200),
        ("sq_diff_sum (2400 c128)", lambda lane: lane.sq_diff_sum(a, b), 200),
        ("batch_sq_diff_sum (256x2400)", lambda lane: lane.batch_sq_diff_sum(stack, b), 5),
    ]

    print(f"{'kernel':<32}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, call, repeats in cases:
        t_py = timeit(lambda: call(lane_py), repeats)
        if lane_c is None:
            print(f"{name:<32}{t_py * 1e3:>10.3f}ms{'n/a':>12}{'n/a':>10}")
            continue
        t_c = timeit(lambda: call(lane_c), repeats)
        agree = abs(call(lane_py) - call(lane_c)) if name != cases[3][0] else float(
            np.abs(call(lane_py) - call(lane_c)).max()
        )
        print(
            f"{name:<32}{t_py * 1e3:>10.3f}ms{t_c * 1e3:>10.3f}ms{t_py / t_c:>9.1f}x"
            f"   (lane gap {agree:.1e})"
        )


def bench_end_to_end(trials):
    frame = {
        "ambient_dim": 40,
        "field": "real",
        "vectors": np.random.default_rng(1).standard_normal((60, 40)).tolist(),
    }
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "frame.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(frame, fh)
        print(f"\nverify --trials {trials} on a 40x60 frame:")
        for label, env_value in (("cython", "0"), ("python", "1")):
            if label == "cython" and lane_c is None:
                print("  cython lane unavailable")
                continue
            env = dict(os.environ, FRAMEKIT_PURE_PYTHON=env_value)
            args = [
                sys.executable, "-m", "framekit", "verify",
                "--input", path, "--trials", str(trials), "--seed", "0",
                "--out", os.path.join(tmp, f"out-{label}.json"),
            ]
            start = time.perf_counter()
            subprocess.run(args, check=True, env=env)
            print(f"  {label:<8}{time.perf_counter() - start:>8.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=1000)
    args = parser.parse_args()
    if lane_c is None:
        print("note: compiled lane not built; showing pure-Python timings only\n")
    bench_reductions()
    bench_end_to_end(args.trials)


if __name__ == "__main__":
    main()

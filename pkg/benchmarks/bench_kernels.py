"""Benchmark the sparse-term kernels: compiled extension vs pure Python.

Runs the two hot workloads (Laurent polynomial products and a relation-module
syzygy computation) under the active backend.  `--both` re-invokes the script
in a subprocess with SEMIZN_PURE=1 to get the pure-Python numbers and prints
a comparison table.

Usage:  python benchmarks/bench_kernels.py [--both] [--repeat N]
"""
import argparse
import json
import os
import random
import subprocess
import sys
import time


def workload_multiply(repeat):
    from semizn.laurent import LaurentPoly

    rng = random.Random(1)
    polys = []
    for _ in range(30):
        terms = {
            (rng.randint(-6, 6), rng.randint(-6, 6)): rng.randint(-99, 99) or 1
            for _ in range(25)
        }
        polys.append(LaurentPoly(2, terms))
    t0 = time.perf_counter()
    for _ in range(repeat):
        for i in range(len(polys) - 1):
            _ = polys[i] * polys[i + 1]
    return time.perf_counter() - t0


def workload_syzygy(repeat):
    from semizn.algebra import ModulePresentation, syzygy_basis
    from semizn.laurent import LaurentPoly

    rels = [[LaurentPoly(2, {(-2, 0): 3, (1, -2): 3})]]
    ys = [
        [LaurentPoly(2, {(2, -2): 3})],
        [LaurentPoly.zero(2)],
        [LaurentPoly(2, {(1, 1): 2})],
        [LaurentPoly(2, {(-1, -1): 2, (2, 2): -2})],
    ]
    steps = [(1, -1), (0, 2), (2, -1), (1, 1)]
    pres = ModulePresentation(n=2, d=1, rels_N=rels)
    t0 = time.perf_counter()
    for _ in range(repeat):
        syzygy_basis(pres, ys, steps)
    return time.perf_counter() - t0


def run(repeat):
    from semizn.kernels import BACKEND

    return {
        "backend": BACKEND,
        "multiply_s": workload_multiply(repeat * 4),
        "syzygy_s": workload_syzygy(repeat),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--both", action="store_true", help="also run the pure backend")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args()

    here = run(args.repeat)
    results = [here]
    if args.both and here["backend"] == "compiled":
        env = dict(os.environ, SEMIZN_PURE="1")
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--repeat", str(args.repeat), "--json"],
            env=env, capture_output=True, text=True, check=True,
        )
        results.append(json.loads(out.stdout))
    if args.json:
        print(json.dumps(here))
        return
    print(f"{'backend':<10} {'multiply [s]':>14} {'syzygy [s]':>12}")
    for r in results:
        print(f"{r['backend']:<10} {r['multiply_s']:>14.3f} {r['syzygy_s']:>12.3f}")
    if len(results) == 2:
        m = results[1]["multiply_s"] / results[0]["multiply_s"]
        s = results[1]["syzygy_s"] / results[0]["syzygy_s"]
        print(f"speedup: multiply x{m:.2f}, syzygy x{s:.2f}")


if __name__ == "__main__":
    main()

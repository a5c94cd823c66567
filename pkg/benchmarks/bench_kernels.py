#!/usr/bin/env python3
"""Benchmark the compiled GF(p) kernel against its pure-Python twin.

Runs identical random workloads through both backends, checks that the
results agree, and prints a timing table.  Usage:

    python3 benchmarks/bench_kernels.py [--p 10007] [--deg 64] [--reps 200]
"""

import argparse
import random
import time


def make_workload(p, deg, reps, seed=20260823):
    rng = random.Random(seed)
    pairs = []
    for _ in range(reps):
        a = [rng.randrange(p) for _ in range(deg + 1)]
        b = [rng.randrange(p) for _ in range(deg // 2 + 1)]
        a[-1] = b[-1] = 1
        pairs.append((a, b))
    return pairs


def run(kernel, pairs, p):
    timings = {}
    outputs = {}
    for name, fn in (("pmul", kernel.pmul), ("pdivmod", kernel.pdivmod),
                     ("pgcd", kernel.pgcd), ("pxgcd", kernel.pxgcd)):
        start = time.perf_counter()
        outputs[name] = [fn(a, b, p) for a, b in pairs]
        timings[name] = time.perf_counter() - start
    start = time.perf_counter()
    mod = pairs[0][1]
    outputs["ppowmod"] = [kernel.ppowmod(a, p - 1, mod, p) for a, _ in pairs]
    timings["ppowmod"] = time.perf_counter() - start
    return timings, outputs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=10007)
    ap.add_argument("--deg", type=int, default=64)
    ap.add_argument("--reps", type=int, default=200)
    args = ap.parse_args()

    from hyptorsion import _kernel_py, kernels
    backends = [("pure", _kernel_py)]
    if kernels.BACKEND == "compiled":
        backends.append(("compiled", kernels.for_prime(args.p)))
    else:
        print("note: compiled backend unavailable; benchmarking pure only")

    pairs = make_workload(args.p, args.deg, args.reps)
    results = {name: run(k, pairs, args.p) for name, k in backends}

    if len(results) == 2:
        assert results["pure"][1] == results["compiled"][1], \
            "backends disagree on outputs"
        print("outputs identical across backends\n")

    ops = ["pmul", "pdivmod", "pgcd", "pxgcd", "ppowmod"]
    header = f"{'op':>10} " + "".join(f"{n:>12} " for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>9}"
    print(f"p={args.p}, deg={args.deg}, reps={args.reps}")
    print(header)
    for op in ops:
        row = f"{op:>10} "
        for name, _ in backends:
            row += f"{results[name][0][op] * 1000:>10.1f}ms "
        if len(backends) == 2:
            ratio = results["pure"][0][op] / results["compiled"][0][op]
            row += f"{ratio:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()

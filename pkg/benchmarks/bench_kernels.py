"""Compare the compiled and pure-Python clause kernels.

Usage: python benchmarks/bench_kernels.py [--atoms N] [--clauses M]
"""

import argparse
import random
import time

from atmod import _pykernels

try:
    from atmod import _ckernels
except ImportError:
    _ckernels = None


def random_clauses(rng, n, m):
    out = []
    for _ in range(m):
        pos = neg = 0
        for i in range(n):
            roll = rng.random()
            if roll < 0.15:
                pos |= 1 << i
            elif roll < 0.3:
                neg |= 1 << i
        out.append((pos, neg))
    return out


def bench(label, fn, inputs, repeat=3):
    best = min(
        sum(_timed(fn, args) for args in inputs)
        for _ in range(repeat))
    print("  %-12s %8.1f ms" % (label, best * 1000))
    return best


def _timed(fn, args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--atoms", type=int, default=14)
    parser.add_argument("--clauses", type=int, default=40)
    parser.add_argument("--instances", type=int, default=50)
    args = parser.parse_args()

    rng = random.Random(1)
    instances = [(random_clauses(rng, args.atoms, args.clauses), args.atoms)
                 for _ in range(args.instances)]
    sat_inputs = [(c, n) for c, n in instances]
    sat_small = [(random_clauses(rng, 8, 20), 8)
                 for _ in range(args.instances)]

    backends = [("pure python", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("compiled extension not available; pure Python only")

    print("find_model: %d instances, %d atoms, %d clauses"
          % (args.instances, args.atoms, args.clauses))
    times = {}
    for label, impl in backends:
        times[label] = bench(label, impl.find_model, sat_inputs)
    _speedup(times)

    print("enum_models: %d instances, 8 atoms, 20 clauses"
          % args.instances)
    times = {}
    for label, impl in backends:
        times[label] = bench(label, impl.enum_models, sat_small)
    _speedup(times)

    print("saturate: %d instances, 8 atoms, 20 clauses" % args.instances)
    times = {}
    for label, impl in backends:
        times[label] = bench(label, impl.saturate,
                             [(c,) for c, _ in sat_small])
    _speedup(times)


def _speedup(times):
    if "compiled" in times and times["compiled"]:
        print("  speedup      %8.1fx"
              % (times["pure python"] / times["compiled"]))


if __name__ == "__main__":
    main()

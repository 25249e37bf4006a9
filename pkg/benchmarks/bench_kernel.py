"""Compare the compiled and pure-Python pairing kernels.

Usage: python3 benchmarks/bench_kernel.py [--pairs N] [--max-len L]
"""

import argparse
import random
import time

from freetoeplitz import _pure

try:
    from freetoeplitz import _speedups
except ImportError:
    _speedups = None


def make_pairs(count, max_len, seed=0):
    rnd = random.Random(seed)
    pairs = []
    for _ in range(count):
        f = tuple(
            rnd.choice((1, -1)) * rnd.randint(1, 3)
            for _ in range(rnd.randint(0, max_len))
        )
        g = tuple(
            rnd.choice((1, -1)) * rnd.randint(1, 3)
            for _ in range(rnd.randint(0, max_len))
        )
        pairs.append((f, g))
    # mirror-heavy pairs that actually recurse, not just die on the
    # first letter comparison
    for _ in range(count // 4):
        i = tuple(rnd.randint(1, 3) for _ in range(rnd.randint(1, max_len // 2)))
        mirror = i + tuple(-c for c in reversed(i))
        pairs.append((mirror, mirror))
    return pairs


def bench(fn, pairs, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for f, g in pairs:
            fn(f, g)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=200000)
    ap.add_argument("--max-len", type=int, default=10)
    args = ap.parse_args()

    pairs = make_pairs(args.pairs, args.max_len)
    total = len(pairs)
    t_pure = bench(_pure.form_factors, pairs)
    print(
        "pure     : %.3f s  (%.2f us/pair)"
        % (t_pure, 1e6 * t_pure / total)
    )
    if _speedups is None:
        print("compiled : not available")
        return
    t_c = bench(_speedups.form_factors, pairs)
    print(
        "compiled : %.3f s  (%.2f us/pair)  speedup x%.1f"
        % (t_c, 1e6 * t_c / total, t_pure / t_c)
    )


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Compare the compiled and pure-Python GF(2) convolution kernels.

Workload: products of random odd-support algebra elements over D8 x C2^5
(order 256), the kind of operation that dominates unit-group closures.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from unitwreath import _kernels_py
from unitwreath.pcgroup import load

try:
    from unitwreath import _kernels
except ImportError:
    _kernels = None

SOURCE = """
group D8xC2_5
gens a c b v w x y z
pow a = c
conj b a = b c
"""

PAIRS = 2000
SUPPORT = 33


def random_unit_bits(rng, order):
    support = rng.sample(range(order), SUPPORT)
    bits = 0
    for g in support:
        bits |= 1 << g
    return bits


def bench(convolver, pairs):
    t0 = time.perf_counter()
    acc = 0
    for u, v in pairs:
        acc ^= convolver.convolve(u, v)
    dt = time.perf_counter() - t0
    return dt, acc


def main():
    group = load(SOURCE)
    rng = random.Random(7)
    pairs = [
        (random_unit_bits(rng, group.order), random_unit_bits(rng, group.order))
        for _ in range(PAIRS)
    ]
    impls = [("python", _kernels_py.Convolver(group.cayley))]
    if _kernels is not None:
        impls.append(("cython", _kernels.Convolver(group.cayley)))

    results = {}
    for name, conv in impls:
        dt, acc = bench(conv, pairs)
        results[name] = (dt, acc)
        rate = PAIRS / dt
        print(f"{name:>7}: {dt:.3f}s for {PAIRS} products "
              f"of support {SUPPORT} ({rate:,.0f} products/s)")

    if len(results) == 2:
        if results["python"][1] != results["cython"][1]:
            raise SystemExit("kernel outputs disagree")
        speedup = results["python"][0] / results["cython"][0]
        print(f"speedup: {speedup:.1f}x (outputs identical)")


if __name__ == "__main__":
    main()

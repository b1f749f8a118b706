"""Compare the compiled and pure-Python straightening kernels.

    python3 bench/benchmark.py [--n 3] [--repeat 3]

Every run installs a fresh kernel, so memo caches start empty.
"""
from __future__ import annotations

import argparse
import random
import time

from uslab import walgebra
from uslab.kernel import CKernel, PyKernel
from uslab.pbw import E, H, make_lie_structure, random_element


def install(n: int, kernel_cls):
    lie = make_lie_structure(n)
    table = [[tuple((a, int(c)) for a, c in sorted(entry.items())) for entry in row] for row in lie.bracket_table]
    lie.kernel = kernel_cls(lie.size, lie.e0_start, table)
    walgebra.w_algebra.cache_clear()
    return lie


def random_products(lie, seed=0, count=200):
    rng = random.Random(seed)
    for _ in range(count):
        random_element(lie, rng, 4, 3, laurent=2) * random_element(lie, rng, 4, 3)


def casimir_centrality(lie):
    n = lie.n
    C = lie.zero()
    for i in range(n + 1):
        C = C + lie.gen(H(i)) * lie.gen(H(i))
        for j in range(n + 1):
            if i != j:
                C = C + lie.gen(E(i, j)) * lie.gen(E(j, i))
    for g in lie.generators:
        assert (C * lie.gen(g) - lie.gen(g) * C).is_zero()


def w_relations(lie):
    walgebra.w_algebra(lie.n).relations()


WORKLOADS = {
    "random products": random_products,
    "casimir centrality": casimir_centrality,
    "W relations": w_relations,
}


def time_workload(fn, n, kernel_cls, repeat):
    best = float("inf")
    for _ in range(repeat):
        lie = install(n, kernel_cls)
        start = time.perf_counter()
        fn(lie)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description="Compare straightening kernels.")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    kernels = [("python", PyKernel)] + ([("cython", CKernel)] if CKernel is not None else [])
    original = make_lie_structure(args.n).kernel
    print(f"n={args.n}, best of {args.repeat}")
    header = f"{'workload':22s}" + "".join(f"{k:>12s}" for k, _ in kernels)
    print(header + ("     speedup" if len(kernels) == 2 else ""))
    try:
        for name, fn in WORKLOADS.items():
            times = [time_workload(fn, args.n, cls, args.repeat) for _, cls in kernels]
            line = f"{name:22s}" + "".join(f"{t:11.3f}s" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:11.1f}x"
            print(line)
    finally:
        make_lie_structure(args.n).kernel = original
        walgebra.w_algebra.cache_clear()
    if CKernel is None:
        print("compiled kernel unavailable; build it with `pip install --no-build-isolation -e .`")


if __name__ == "__main__":
    main()

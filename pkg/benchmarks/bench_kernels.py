#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy fallback.

Times the four hot kernels on a random G(n, p) graph: all-pairs BFS,
the per-node deleted-efficiency sweep, betweenness, and a batch of SI runs.

    python benchmarks/bench_kernels.py --n 200 --p 0.1 --runs 200
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from vitalrank._kernels import _pykern, _seeds

try:
    from vitalrank._kernels import _ckern
except ImportError:
    _ckern = None


def random_csr(n: int, p: float, seed: int):
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    adj = upper | upper.T
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(adj.sum(axis=1))
    # row-major flatnonzero is grouped by row with columns ascending: CSR order
    indices = (np.flatnonzero(adj) % n).astype(np.int32)
    return indptr, indices


def bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--runs", type=int, default=200, help="SI runs in the batch")
    ap.add_argument("--beta", type=float, default=0.2)
    ap.add_argument("--t-max", type=int, default=10)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    indptr, indices = random_csr(args.n, args.p, args.seed)
    n = args.n
    seeds = np.array([0], dtype=np.int32)
    keys = np.array(
        [_seeds.fold_key(1234, [1, 0, r]) for r in range(args.runs)], dtype=np.uint64
    ).view(np.int64)

    tasks = {
        "apsp": lambda k: k.bfs_block(indptr, indices, 0, n),
        "deleted_eff": lambda k: [
            k.inv_dist_sum(indptr, indices, skip=i) for i in range(n)
        ],
        "betweenness": lambda k: k.brandes(indptr, indices),
        "si_batch": lambda k: k.si_counts(
            indptr, indices, seeds, args.beta, args.t_max, keys
        ),
    }

    print(f"graph: n={n} p={args.p} edges={indices.size // 2}  "
          f"(si: runs={args.runs} beta={args.beta} t_max={args.t_max})")
    header = f"{'kernel':<14}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, task in tasks.items():
        t_py = bench(lambda: task(_pykern), args.repeat)
        if _ckern is not None:
            t_c = bench(lambda: task(_ckern), args.repeat)
            print(f"{name:<14}{t_py:>11.4f}s{t_c:>11.4f}s{t_py / t_c:>9.1f}x")
        else:
            print(f"{name:<14}{t_py:>11.4f}s{'(absent)':>12}{'-':>10}")
    if _ckern is None:
        print("\ncompiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()

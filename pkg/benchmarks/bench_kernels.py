"""Compare the numba and numpy kernels on random integer point sets.

    python benchmarks/bench_kernels.py --sizes 100 200 400 --repeat 5
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from geotrav import _kernels as K


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def case(n, rng):
    side = int(np.sqrt(n * np.pi / 8) * 1000)
    X = rng.integers(0, side, n, dtype=np.int64)
    Y = rng.integers(0, side, n, dtype=np.int64)
    r2 = 1000 * 1000
    I, J = K.unit_disk_edges_numpy(X, Y, r2)
    adj = [[] for _ in range(n)]
    for i, j in zip(I.tolist(), J.tolist()):
        adj[i].append(j)
        adj[j].append(i)
    indptr, indices = K.csr(adj)
    dist = K.bfs_distances_numpy(indptr, indices)
    return X, Y, r2, indptr, indices, dist


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if K.njit is None:
        raise SystemExit("numba is not installed")
    rng = np.random.default_rng(args.seed)
    # compile outside the timed region
    X, Y, r2, indptr, indices, dist = case(8, rng)
    K.unit_disk_edges_numba(X, Y, r2)
    K.bfs_distances_numba(indptr, indices)
    K.min_sqdist_by_hops_numba(X, Y, dist, r2, 8 * r2)

    print(f"{'kernel':<20}{'n':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for n in args.sizes:
        X, Y, r2, indptr, indices, dist = case(n, rng)
        rows = [
            ("unit_disk_edges", lambda b: getattr(K, f"unit_disk_edges_{b}")(X, Y, r2)),
            ("bfs_distances", lambda b: getattr(K, f"bfs_distances_{b}")(indptr, indices)),
            ("min_sqdist_by_hops", lambda b: getattr(K, f"min_sqdist_by_hops_{b}")(X, Y, dist, r2, 8 * r2)),
        ]
        for name, run in rows:
            a = best_of(lambda: run("numpy"), args.repeat)
            b = best_of(lambda: run("numba"), args.repeat)
            print(f"{name:<20}{n:>6}{a * 1e3:>12.2f}{b * 1e3:>12.2f}{a / b:>10.1f}x")


if __name__ == "__main__":
    main()

"""Integer hot loops: pairwise unit-disk test, all-pairs BFS, per-hop minimum
squared distance.

Coordinates arrive scaled to a common denominator, so every comparison is an
exact int64 comparison. Each kernel has a numba version and a pure-numpy
version; set ``GEOTRAV_DISABLE_NUMBA=1`` to force numpy.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an optional accelerator
    njit = None

# |scaled coordinate| bound keeping dx^2 + dy^2 and 8*D^2 below 2^62
SAFE_COORD = 1 << 29

USE_NUMBA = njit is not None and os.environ.get("GEOTRAV_DISABLE_NUMBA", "") not in ("1", "true", "yes")
BACKEND = "numba" if USE_NUMBA else "numpy"


# --------------------------------------------------------------------------
# numpy paths
# --------------------------------------------------------------------------

def unit_disk_edges_numpy(X, Y, r2):
    dx = X[:, None] - X[None, :]
    dy = Y[:, None] - Y[None, :]
    close = dx * dx + dy * dy <= r2
    i, j = np.nonzero(np.triu(close, k=1))
    return i.astype(np.int64), j.astype(np.int64)


def bfs_distances_numpy(indptr, indices):
    n = len(indptr) - 1
    # float32 keeps the product on BLAS; counts stay exact below 2^24
    adj = np.zeros((n, n), dtype=np.float32)
    for u in range(n):
        adj[u, indices[indptr[u]:indptr[u + 1]]] = 1.0
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    seen = np.eye(n, dtype=bool)
    frontier = seen.copy()
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.float32) @ adj) > 0
        nxt &= ~seen
        dist[nxt] = level
        seen |= nxt
        frontier = nxt
    return dist


def min_sqdist_by_hops_numpy(X, Y, dist, lo, hi):
    n = len(X)
    out = np.full(n + 1, -1, dtype=np.int64)
    if n < 2:
        return out
    dx = X[:, None] - X[None, :]
    dy = Y[:, None] - Y[None, :]
    s = dx * dx + dy * dy
    iu = np.triu_indices(n, k=1)
    s = s[iu]
    d = dist[iu]
    keep = (s > lo) & (s < hi) & (d > 0)
    s, d = s[keep], d[keep]
    for g in np.unique(d):
        out[g] = s[d == g].min()
    return out


# --------------------------------------------------------------------------
# numba paths
# --------------------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _unit_disk_edges_nb(X, Y, r2):
        n = X.shape[0]
        cap = 16
        I = np.empty(cap, dtype=np.int64)
        J = np.empty(cap, dtype=np.int64)
        m = 0
        for i in range(n):
            for j in range(i + 1, n):
                dx = X[i] - X[j]
                dy = Y[i] - Y[j]
                if dx * dx + dy * dy <= r2:
                    if m == cap:
                        cap *= 2
                        I2 = np.empty(cap, dtype=np.int64)
                        J2 = np.empty(cap, dtype=np.int64)
                        I2[:m] = I[:m]
                        J2[:m] = J[:m]
                        I, J = I2, J2
                    I[m] = i
                    J[m] = j
                    m += 1
        return I[:m].copy(), J[:m].copy()

    @njit(cache=True)
    def _bfs_distances_nb(indptr, indices):
        n = indptr.shape[0] - 1
        dist = np.full((n, n), -1, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        for s in range(n):
            row = dist[s]
            row[s] = 0
            head = 0
            tail = 1
            queue[0] = s
            while head < tail:
                u = queue[head]
                head += 1
                for t in range(indptr[u], indptr[u + 1]):
                    w = indices[t]
                    if row[w] < 0:
                        row[w] = row[u] + 1
                        queue[tail] = w
                        tail += 1
        return dist

    @njit(cache=True)
    def _min_sqdist_by_hops_nb(X, Y, dist, lo, hi):
        n = X.shape[0]
        out = np.full(n + 1, -1, dtype=np.int64)
        for i in range(n):
            for j in range(i + 1, n):
                g = dist[i, j]
                if g <= 0:
                    continue
                dx = X[i] - X[j]
                dy = Y[i] - Y[j]
                s = dx * dx + dy * dy
                if s > lo and s < hi and (out[g] < 0 or s < out[g]):
                    out[g] = s
        return out

    def unit_disk_edges_numba(X, Y, r2):
        return _unit_disk_edges_nb(X, Y, np.int64(r2))

    def bfs_distances_numba(indptr, indices):
        return _bfs_distances_nb(indptr, indices)

    def min_sqdist_by_hops_numba(X, Y, dist, lo, hi):
        return _min_sqdist_by_hops_nb(X, Y, dist, np.int64(lo), np.int64(hi))

else:  # pragma: no cover
    unit_disk_edges_numba = unit_disk_edges_numpy
    bfs_distances_numba = bfs_distances_numpy
    min_sqdist_by_hops_numba = min_sqdist_by_hops_numpy


if USE_NUMBA:
    unit_disk_edges = unit_disk_edges_numba
    bfs_distances = bfs_distances_numba
    min_sqdist_by_hops = min_sqdist_by_hops_numba
else:
    unit_disk_edges = unit_disk_edges_numpy
    bfs_distances = bfs_distances_numpy
    min_sqdist_by_hops = min_sqdist_by_hops_numpy


def csr(adjacency) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
    for v, nbrs in enumerate(adjacency):
        indptr[v + 1] = indptr[v] + len(nbrs)
    indices = np.fromiter((w for nbrs in adjacency for w in nbrs), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices

"""Numpy implementations of the compiled kernels (used when the extension is absent)."""

import numpy as np


def _norms(diff):
    # coordinate-sequential sum, matching the compiled kernels bit for bit
    diff = np.atleast_2d(diff)
    acc = diff[:, 0] * diff[:, 0]
    for k in range(1, diff.shape[1]):
        acc += diff[:, k] * diff[:, k]
    return np.sqrt(acc)


def condensed_distances(X):
    X = np.ascontiguousarray(X, dtype=np.float64)
    n = X.shape[0]
    out = np.empty(n * (n - 1) // 2, dtype=np.float64)
    pos = 0
    for i in range(1, n):
        out[pos:pos + i] = _norms(X[i] - X[:i])
        pos += i
    return out


def cross_distances(A, B):
    A = np.ascontiguousarray(A, dtype=np.float64)
    B = np.ascontiguousarray(B, dtype=np.float64)
    out = np.empty((A.shape[0], B.shape[0]), dtype=np.float64)
    for a in range(A.shape[0]):
        out[a] = _norms(A[a] - B)
    return out


def entry_thresholds(dist, rows):
    # dist[j, c]: center j to candidate c
    n = rows.shape[1]
    best = np.ones(dist.shape[1], dtype=np.int64)
    for j in range(rows.shape[0]):
        need = np.searchsorted(rows[j], dist[j], side="left") + 1
        np.maximum(best, need, out=best)
    np.minimum(best, n + 1, out=best)
    return best


def depth_scan(dist, rows):
    n = rows.shape[1]
    for k in range(2, n + 1):
        if not np.all(dist <= rows[:, n - k]):
            return k - 1
    return n

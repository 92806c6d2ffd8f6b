# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for distance tables and ball-membership scans.

Every function here has a numpy twin in ``_pykernels`` with the same
signature and semantics.  Summation over coordinates is strictly sequential
(no -ffast-math), so results are deterministic for a given input.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def condensed_distances(const double[:, ::1] X):
    """Lower-triangular pairwise distances, row-major: (1,0), (2,0), (2,1), ..."""
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1]
    cdef Py_ssize_t i, j, k, pos = 0
    cdef double s, t
    out = np.empty(n * (n - 1) // 2, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(1, n):
            for j in range(i):
                s = 0.0
                for k in range(d):
                    t = X[i, k] - X[j, k]
                    s += t * t
                o[pos] = sqrt(s)
                pos += 1
    return out


def cross_distances(const double[:, ::1] A, const double[:, ::1] B):
    """Full ``len(A) x len(B)`` Euclidean distance matrix."""
    cdef Py_ssize_t na = A.shape[0], nb = B.shape[0], d = A.shape[1]
    cdef Py_ssize_t a, b, k
    cdef double s, t
    out = np.empty((na, nb), dtype=np.float64)
    cdef double[:, ::1] o = out
    with nogil:
        for a in range(na):
            for b in range(nb):
                s = 0.0
                for k in range(d):
                    t = A[a, k] - B[b, k]
                    s += t * t
                o[a, b] = sqrt(s)
    return out


cdef inline Py_ssize_t _lower_bound(const double* first, Py_ssize_t n, double value) noexcept nogil:
    # branchless: first index with first[i] >= value (n when none); needs n >= 1
    cdef const double* base = first
    cdef Py_ssize_t half
    while n > 1:
        half = n >> 1
        base = base + half if base[half] < value else base
        n -= half
    return (base - first) + (base[0] < value)


def entry_thresholds(const double[:, ::1] dist, const double[:, ::1] rows):
    """Smallest ball size at which each candidate lies in every center's ball.

    ``dist[j, c]`` is the distance from center ``j`` to candidate ``c``;
    ``rows[j]`` holds center ``j``'s sorted distances to the sample.  A
    candidate outside some ball even at full size gets ``n + 1``.
    """
    # center-major so rows[j] stays cached while dist[j] streams
    cdef Py_ssize_t m = dist.shape[0], nc = dist.shape[1], n = rows.shape[1]
    cdef Py_ssize_t c, j, need
    cdef const double* row
    out = np.ones(nc, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    if n == 0:
        return out
    with nogil:
        for j in range(m):
            row = &rows[j, 0]
            for c in range(nc):
                if o[c] > n:
                    continue
                need = _lower_bound(row, n, dist[j, c]) + 1
                if need > o[c]:
                    o[c] = need
    return out


def depth_scan(const double[::1] dist, const double[:, ::1] rows):
    """Ball-counting depth scan with early exit; returns the depth numerator.

    For k = 2..n every center's ball holding n-k+1 sample points must contain
    the query; the first k where one does not gives depth k-1.
    """
    cdef Py_ssize_t m = rows.shape[0], n = rows.shape[1]
    cdef Py_ssize_t k, j, size, inside
    cdef Py_ssize_t result = n
    with nogil:
        for k in range(2, n + 1):
            size = n - k + 1
            inside = 0
            for j in range(m):
                if dist[j] <= rows[j, size - 1]:
                    inside += 1
                else:
                    break
            if inside != m:
                result = k - 1
                break
    return result

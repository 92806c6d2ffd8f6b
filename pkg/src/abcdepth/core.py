"""Sample container, triangular distance table and the ball system.

Indices are 0-based throughout.  A ball "of size m" around a center is the
closed ball whose radius is the m-th smallest distance from that center to
the sample points; under distance ties it may hold more than m points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from abcdepth import kernels
from abcdepth.errors import ContractError, InputError


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    arr.flags.writeable = False
    return arr


def as_points(points, d=None, what="points"):
    """Coerce ``points`` to a C-contiguous (k, d) float64 array."""
    try:
        arr = np.asarray(points, dtype=np.float64)
    except ValueError as exc:  # ragged nested sequences
        raise InputError(f"{what}: points must all have the same dimension") from exc
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1) if d in (None, 1) else arr.reshape(1, -1)
    if arr.ndim != 2:
        raise InputError(f"{what}: expected a 2-D array of points, got shape {arr.shape}")
    if d is not None and arr.shape[0] and arr.shape[1] != d:
        raise InputError(f"{what}: dimension {arr.shape[1]} does not match {d}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{what}: coordinates must be finite")
    return np.ascontiguousarray(arr)


def as_point(x, d):
    arr = np.asarray(x, dtype=np.float64).reshape(-1)
    if arr.shape[0] != d:
        raise InputError(f"query point has dimension {arr.shape[0]}, expected {d}")
    if not np.all(np.isfinite(arr)):
        raise InputError("query point coordinates must be finite")
    return arr


class DataSet:
    """An ordered sample of ``n`` points in R^d (repetitions allowed).

    The coordinate array is read-only, so a DataSet can be shared freely.
    """

    __slots__ = ("points",)

    def __init__(self, points):
        arr = as_points(points, what="DataSet")
        if arr.shape[0] < 1:
            raise InputError("DataSet needs at least one point")
        if arr.shape[1] < 1:
            raise InputError("DataSet points need dimension >= 1")
        self.points = _frozen(arr)

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def d(self):
        return self.points.shape[1]

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        if not isinstance(other, DataSet):
            return NotImplemented
        return self.points.shape == other.points.shape and np.array_equal(self.points, other.points)

    def __repr__(self):
        return f"DataSet(n={self.n}, d={self.d})"

    def is_degenerate(self):
        """True when every point coincides with the first one."""
        return bool(np.all(self.points == self.points[0]))


class TriangularDistanceTable:
    """Pairwise Euclidean distances stored as a lower triangle.

    Row ``i`` (``i = 1..n-1``) holds ``d(x_i, x_j)`` for ``j < i``; the rows
    are concatenated into one flat array.
    """

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        values = _frozen(values)
        if values.shape != (n * (n - 1) // 2,):
            raise InputError(f"triangular table for n={n} needs {n * (n - 1) // 2} entries")
        self.n = n
        self.values = values

    def row(self, i):
        """Distances from point ``i`` to points ``0..i-1``."""
        if not 0 <= i < self.n:
            raise IndexError(i)
        start = i * (i - 1) // 2
        return self.values[start:start + i]

    def lookup(self, i, j):
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError((i, j))
        if i == j:
            return 0.0
        if i < j:
            i, j = j, i
        return float(self.values[i * (i - 1) // 2 + j])

    def to_square(self):
        sq = np.zeros((self.n, self.n), dtype=np.float64)
        # row slices avoid materializing n^2 index arrays
        for i in range(1, self.n):
            r = self.row(i)
            sq[i, :i] = r
            sq[:i, i] = r
        return sq

    def __len__(self):
        return self.values.shape[0]


def build_distance_table(data):
    """Compute all pairwise sample distances (the table's lower triangle)."""
    if not isinstance(data, DataSet):
        data = DataSet(data)
    return TriangularDistanceTable(data.n, kernels.condensed_distances(data.points))


@dataclass(frozen=True, eq=False)
class BallSystem:
    """Per-center sorted distances to the sample.

    Centers ``0..n_sample-1`` are the sample points in order; any extra
    centers follow.  ``distances[c, i]`` is the distance from center ``c`` to
    sample point ``i`` and ``sorted_distances[c]`` is that row sorted, so the
    radius of a ball of size ``m`` is ``sorted_distances[c, m - 1]``.
    """

    center_points: np.ndarray
    distances: np.ndarray
    sorted_distances: np.ndarray
    n_sample: int
    table: TriangularDistanceTable

    @property
    def n_centers(self):
        return self.center_points.shape[0]

    @property
    def centers(self):
        return range(self.n_centers)

    @property
    def d(self):
        return self.center_points.shape[1]

    def radius(self, center, m):
        return ball_radius(self, center, m)

    def radii(self, m):
        """Radius of every center's ball of size ``m``."""
        _check_size(self, m)
        return self.sorted_distances[:, m - 1]


def build_ball_system(data, table=None, extra_centers=None):
    """Sort each center's distances to the sample.

    Centers are the sample points followed by ``extra_centers``; extra rows
    hold distances to the ``n`` sample points only.
    """
    if not isinstance(data, DataSet):
        data = DataSet(data)
    if table is None:
        table = build_distance_table(data)
    elif table.n != data.n:
        raise InputError(f"distance table is for n={table.n}, data has n={data.n}")
    raw = table.to_square()
    centers = data.points
    if extra_centers is not None:
        extra = as_points(extra_centers, d=data.d, what="extra centers")
        if extra.shape[0]:
            raw = np.vstack([raw, kernels.cross_distances(extra, data.points)])
            centers = np.vstack([data.points, extra])
    ordered = np.sort(raw, axis=1)
    return BallSystem(
        center_points=_frozen(centers),
        distances=_frozen(raw),
        sorted_distances=_frozen(ordered),
        n_sample=data.n,
        table=table,
    )


def _check_size(system, m):
    if not 1 <= m <= system.n_sample:
        raise ContractError(f"ball size must be in 1..{system.n_sample}, got {m}")


def ball_radius(system, center, m):
    """m-th smallest distance from ``center`` to the sample points."""
    _check_size(system, m)
    if not 0 <= center < system.n_centers:
        raise IndexError(f"center {center} out of range 0..{system.n_centers - 1}")
    return float(system.sorted_distances[center, m - 1])


def ball_contains(center_point, radius, query_point):
    """Closed-ball membership: ``dist(center, query) <= radius``."""
    c = np.asarray(center_point, dtype=np.float64).reshape(-1)
    q = np.asarray(query_point, dtype=np.float64).reshape(-1)
    if c.shape != q.shape:
        raise InputError(f"dimension mismatch: center has {c.shape[0]}, query has {q.shape[0]}")
    # same kernel as the ball radii, so a boundary point is never lost to rounding
    return bool(kernels.cross_distances(c.reshape(1, -1), q.reshape(1, -1))[0, 0] <= radius)


def candidate_center_distances(system, candidates=None):
    """Distance matrix from candidates (rows) to the system's centers (columns).

    With ``candidates=None`` the candidates are the centers themselves
    (sample points first, then extra centers) and the sample blocks are taken
    from the already computed distances.
    """
    if candidates is not None:
        cand = as_points(candidates, d=system.d, what="candidates")
        return kernels.cross_distances(cand, system.center_points)
    n = system.n_sample
    m = system.n_centers
    out = np.empty((m, m), dtype=np.float64)
    out[:, :n] = system.distances
    if m > n:
        out[:n, n:] = system.distances[n:].T
        extra = TriangularDistanceTable(m - n, kernels.condensed_distances(system.center_points[n:]))
        out[n:, n:] = extra.to_square()
    return out

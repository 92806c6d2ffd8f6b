"""Level sets, Tukey median and point depth from intersections of balls.

A level set with ball size ``m`` holds the candidates lying in every
center's ball of size ``m``; its depth label is ``(n - m + 1) / n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

import numpy as np

from abcdepth import kernels
from abcdepth.augmentation import DEFAULT_MARGIN, augment
from abcdepth.core import (
    DataSet,
    as_point,
    build_ball_system,
    build_distance_table,
    candidate_center_distances,
)
from abcdepth.errors import ContractError, UnsupportedDimensionError
from abcdepth.geometry import convex_hull_2d

SAMPLE_POINT = "sample-point"
OUT_OF_SAMPLE = "out-of-sample"


def ball_size(n, alpha):
    """``floor(n * (1 - alpha) + 1)`` computed exactly."""
    return floor(n * (1 - Fraction(alpha)) + 1)


@dataclass(frozen=True)
class LevelSet:
    alpha: Fraction
    alpha_numerator: int
    alpha_denominator: int
    ball_size: int
    members: tuple

    @property
    def depth(self):
        return Fraction(self.alpha_numerator, self.alpha_denominator)

    def __len__(self):
        return len(self.members)


def _level(n, alpha, m, members):
    return LevelSet(Fraction(alpha), n - m + 1, n, m, tuple(int(i) for i in members))


@dataclass(frozen=True, eq=False)
class MedianResult:
    median_indices: tuple
    median_points: np.ndarray
    depth_numerator: int
    n: int
    levels: tuple
    iterations: int
    candidates: np.ndarray
    n_artificial: int = 0

    @property
    def depth(self):
        return Fraction(self.depth_numerator, self.n)

    def __eq__(self, other):
        if not isinstance(other, MedianResult):
            return NotImplemented
        return (self.median_indices == other.median_indices
                and np.array_equal(self.median_points, other.median_points)
                and self.depth_numerator == other.depth_numerator and self.n == other.n
                and self.levels == other.levels and self.iterations == other.iterations
                and np.array_equal(self.candidates, other.candidates)
                and self.n_artificial == other.n_artificial)


@dataclass(frozen=True)
class DepthResult:
    """Approximate depth ``depth_numerator / depth_denominator`` of ``point``.

    ``exit_ball_size`` is the ball size at which some ball first excluded the
    point (0 if none ever did).
    """

    point: tuple
    depth_numerator: int
    depth_denominator: int
    exit_ball_size: int
    mode: str
    index: int | None = None

    @property
    def depth(self):
        return Fraction(self.depth_numerator, self.depth_denominator)


def entry_sizes(system, candidates=None):
    """For each candidate, the smallest ball size at which it is in every ball.

    Values above ``n`` mean the candidate escapes some ball even at full size.
    """
    if candidates is None:
        dist = candidate_center_distances(system)  # symmetric
    else:
        dist = np.ascontiguousarray(candidate_center_distances(system, candidates).T)
    return kernels.entry_thresholds(dist, system.sorted_distances)


def compute_level_sets(data, system, candidates=None, start_alpha=None):
    """Iterate alpha upward by 1/n and collect candidates inside all balls.

    ``candidates=None`` means the system's centers (sample points followed by
    any artificial centers).  Returns the non-empty level sets in increasing
    alpha order; the last one is the approximate Tukey median.
    """
    if not isinstance(data, DataSet):
        data = DataSet(data)
    n = data.n
    alpha = Fraction(1, data.d + 1) if start_alpha is None else Fraction(start_alpha)
    if not 0 < alpha <= 1:
        raise ContractError(f"start alpha must be in (0, 1], got {alpha}")
    need = entry_sizes(system, candidates)

    if data.is_degenerate():
        return [_level(n, Fraction(1), 1, np.flatnonzero(need <= 1))]

    step = Fraction(1, n)
    m = ball_size(n, alpha)
    # an empty starting level is widened until something is inside every ball
    while m < n and not np.any(need <= m):
        alpha -= step
        m = ball_size(n, alpha)
    if not np.any(need <= m):
        return []

    levels = []
    while m >= 1:
        members = np.flatnonzero(need <= m)
        if members.size == 0:
            break
        levels.append(_level(n, alpha, m, members))
        if members.size <= 1:
            break
        alpha += step
        m = ball_size(n, alpha)
    return levels


def tukey_median(data, artificial_count=0, seed=0, margin=DEFAULT_MARGIN, domain=None):
    """Approximate Tukey median: the deepest non-empty level set.

    With ``artificial_count > 0`` the sample is augmented with uniform points
    which act both as candidates and as ball centers.
    """
    if not isinstance(data, DataSet):
        data = DataSet(data)
    extra = None
    if artificial_count:
        extra = augment(data, artificial_count, seed=seed, domain=domain, margin=margin).artificial
    system = build_ball_system(data, build_distance_table(data), extra)
    levels = compute_level_sets(data, system)
    last = levels[-1]
    candidates = system.center_points
    idx = last.members
    return MedianResult(
        median_indices=idx,
        median_points=candidates[list(idx)],
        depth_numerator=last.alpha_numerator,
        n=data.n,
        levels=tuple(levels),
        iterations=len(levels),
        candidates=candidates,
        n_artificial=0 if extra is None else extra.shape[0],
    )


def _depth_result(point, k, n, mode, index=None):
    return DepthResult(
        point=tuple(float(v) for v in point),
        depth_numerator=int(k),
        depth_denominator=n,
        exit_ball_size=0 if k >= n else n - int(k),
        mode=mode,
        index=index,
    )


def depth_of_sample_point(data, system, index):
    """Depth of sample point ``index`` by counting the balls that contain it."""
    if not isinstance(data, DataSet):
        data = DataSet(data)
    if not 0 <= index < data.n:
        raise IndexError(f"sample index {index} out of range 0..{data.n - 1}")
    dist = np.ascontiguousarray(system.distances[:, index])
    k = kernels.depth_scan(dist, system.sorted_distances)
    return _depth_result(data.points[index], k, data.n, SAMPLE_POINT, index)


def depth_of_out_of_sample_point(data, system, x):
    """Depth of an arbitrary point; ball sizes count sample points only."""
    if not isinstance(data, DataSet):
        data = DataSet(data)
    x = as_point(x, data.d)
    dist = kernels.cross_distances(x.reshape(1, -1), system.center_points)[0]
    k = kernels.depth_scan(dist, system.sorted_distances)
    return _depth_result(x, k, data.n, OUT_OF_SAMPLE)


def sample_depths(data, system):
    """Depth numerators of all sample points at once (same values as the scan)."""
    if not isinstance(data, DataSet):
        data = DataSet(data)
    n = data.n
    need = kernels.entry_thresholds(system.distances, system.sorted_distances)
    return np.clip(n + 1 - need, 1, n)


def contour_2d(level, candidates):
    """Convex hull (CCW) of a 2-D level set's members."""
    pts = np.asarray(candidates, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise UnsupportedDimensionError("contours are only defined for 2-D data")
    members = level.members if isinstance(level, LevelSet) else level
    return convex_hull_2d(pts[list(members)])

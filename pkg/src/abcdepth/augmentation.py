"""Artificial points drawn uniformly from a box around the sample.

Artificial points serve as extra candidates and extra ball centers; the depth
denominator stays the size of the original sample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from abcdepth.core import DataSet
from abcdepth.errors import InputError

#: Margin (as a fraction of each axis' range) used when none is given.
DEFAULT_MARGIN = 3.0
#: Number of artificial points used by the verification harness by default.
DEFAULT_ARTIFICIAL = 1000
#: Half-width given to axes along which the sample has zero range.
ZERO_RANGE_EPS = 1e-9

PRNG_NAME = "numpy.random.PCG64"
UNIFORM_METHOD = "Generator.random (53-bit doubles on [0, 1))"


def make_rng(seed):
    """The project-wide generator: PCG64 seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True, eq=False)
class Box:
    lower: np.ndarray
    upper: np.ndarray
    margin: float = 0.0

    @property
    def d(self):
        return self.lower.shape[0]

    def contains(self, points):
        pts = np.asarray(points, dtype=np.float64)
        return np.all((pts >= self.lower) & (pts <= self.upper), axis=-1)

    def __eq__(self, other):
        if not isinstance(other, Box):
            return NotImplemented
        return (np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)
                and self.margin == other.margin)


def bounding_domain(data, margin=DEFAULT_MARGIN):
    """Axis-aligned box ``[min - margin*range, max + margin*range]`` per axis."""
    if not isinstance(data, DataSet):
        data = DataSet(data)
    if margin < 0:
        raise InputError(f"margin must be >= 0, got {margin}")
    lo = data.points.min(axis=0)
    hi = data.points.max(axis=0)
    span = hi - lo
    lower = lo - margin * span
    upper = hi + margin * span
    flat = span == 0
    # at large |x| an absolute epsilon can round away, so keep a few ulps at least
    half = np.maximum(ZERO_RANGE_EPS, 4 * np.spacing(np.abs(lo[flat])))
    lower[flat] = lo[flat] - half
    upper[flat] = hi[flat] + half
    lower.flags.writeable = False
    upper.flags.writeable = False
    return Box(lower, upper, float(margin))


@dataclass(frozen=True, eq=False)
class AugmentedDataSet:
    """The sample followed by ``N - n`` artificial points."""

    sample: DataSet
    artificial: np.ndarray
    seed: int
    domain: Box

    @property
    def n(self):
        return self.sample.n

    @property
    def N(self):
        return self.sample.n + self.artificial.shape[0]

    @property
    def points(self):
        if self.artificial.shape[0] == 0:
            return self.sample.points
        return np.vstack([self.sample.points, self.artificial])

    @property
    def is_artificial(self):
        flags = np.zeros(self.N, dtype=bool)
        flags[self.n:] = True
        return flags

    def __eq__(self, other):
        if not isinstance(other, AugmentedDataSet):
            return NotImplemented
        return (self.sample == other.sample and np.array_equal(self.artificial, other.artificial)
                and self.seed == other.seed and self.domain == other.domain)


def augment(data, count, seed=0, domain=None, margin=DEFAULT_MARGIN):
    """Append ``count`` i.i.d. uniform points from ``domain``.

    Draws are consumed row by row from one PCG64 stream, so a smaller
    ``count`` yields a prefix of a larger one with the same seed.
    """
    if not isinstance(data, DataSet):
        data = DataSet(data)
    if count < 0:
        raise InputError(f"artificial point count must be >= 0, got {count}")
    if domain is None:
        domain = bounding_domain(data, margin)
    elif domain.d != data.d:
        raise InputError(f"domain has dimension {domain.d}, data has {data.d}")
    u = make_rng(seed).random((count, data.d))
    pts = domain.lower + (domain.upper - domain.lower) * u
    # rounding in lower + width*u may step one ulp past the upper face
    np.minimum(pts, domain.upper, out=pts)
    pts.flags.writeable = False
    return AugmentedDataSet(data, pts, int(seed), domain)

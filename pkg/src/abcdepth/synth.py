"""Deterministic generators for standard-normal, ring and triangle samples.

All draws come from the project PCG64 stream.  Normal variates use the
inverse normal CDF (``scipy.special.ndtri``) on uniforms; the ring is sampled
by exact radial inversion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from abcdepth.augmentation import PRNG_NAME, make_rng
from abcdepth.core import DataSet
from abcdepth.errors import InputError

KINDS = ("normal", "ring", "triangle")
NORMAL_TRANSFORM = "inverse-cdf (scipy.special.ndtri) of PCG64 uniforms"
TRIANGLE = ((0.0, 1.0), (-1.0, 0.0), (1.0, 0.0))

_TINY = 2.0 ** -53


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int = 3
    d: int = 2
    seed: int = 0
    radii: tuple = (1.0, 2.0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown distribution {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if self.d < 1:
            raise InputError(f"d must be >= 1, got {self.d}")
        if self.kind == "ring":
            r1, r2 = self.radii
            if self.d != 2:
                raise InputError("ring samples are 2-D only")
            if not 0 < r1 < r2:
                raise InputError(f"ring radii need 0 < r1 < r2, got {self.radii}")
        if self.kind == "triangle" and self.d != 2:
            raise InputError("the triangle sample is 2-D")

    def metadata(self):
        meta = {"dist": self.kind, "n": self.n, "d": self.d, "seed": self.seed, "prng": PRNG_NAME}
        if self.kind == "normal":
            meta["normal_transform"] = NORMAL_TRANSFORM
        if self.kind == "ring":
            meta["radii"] = list(self.radii)
        return meta


def standard_normal(rng, shape):
    u = rng.random(shape)
    np.maximum(u, _TINY, out=u)  # keep ndtri finite
    return ndtri(u)


def _ring(rng, n, r1, r2):
    u = rng.random((n, 2))
    r = np.sqrt(r1 * r1 + u[:, 0] * (r2 * r2 - r1 * r1))
    theta = 2.0 * np.pi * u[:, 1]
    pts = np.column_stack([r * np.cos(theta), r * np.sin(theta)])
    # trig rounding can leave a norm an ulp outside [r1, r2]; nudge those back
    for _ in range(64):
        norms = np.sqrt((pts * pts).sum(axis=1))
        low, high = norms < r1, norms > r2
        if not (low.any() or high.any()):
            break
        pts[low] *= 1.0 + 2.0 ** -52
        pts[high] *= 1.0 - 2.0 ** -52
    return pts


def generate(spec):
    """Draw the sample described by ``spec``; the triangle ignores ``n``."""
    if spec.kind == "triangle":
        return DataSet(TRIANGLE)
    rng = make_rng(spec.seed)
    if spec.kind == "normal":
        return DataSet(standard_normal(rng, (spec.n, spec.d)))
    return DataSet(_ring(rng, spec.n, *spec.radii))

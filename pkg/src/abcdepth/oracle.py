"""Exact and bounding halfspace-depth references for small instances.

The exact routines convert coordinates to integers (every float is a dyadic
rational), so orientation tests have no rounding and no general-position
assumption is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

import numpy as np

from abcdepth.augmentation import make_rng
from abcdepth.errors import CostGuardError, InputError

SMALLD_MAX_N = 25
SMALLD_MAX_D = 3


@dataclass(frozen=True, eq=False)
class DirectionSet:
    vectors: np.ndarray
    provenance: str

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors, dtype=np.float64))
        if v.shape[0] == 0:
            raise InputError("direction set is empty")
        if not np.allclose(np.linalg.norm(v, axis=1), 1.0, rtol=0, atol=1e-12):
            raise InputError("directions must be unit vectors")
        object.__setattr__(self, "vectors", v)

    @property
    def d(self):
        return self.vectors.shape[1]

    def __len__(self):
        return self.vectors.shape[0]


def sample_directions(d, count, seed=0):
    """``count`` directions uniform on the unit sphere."""
    g = make_rng(seed).standard_normal((count, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return DirectionSet(g, "sampled-uniform")


def axis_directions(d):
    eye = np.eye(d)
    return DirectionSet(np.vstack([eye, -eye]), "axis")


def pairwise_directions(points, x):
    """One direction inside every cell of the 2-D direction arrangement at ``x``.

    The boundaries are the normals of ``x_i - x``; bisectors of consecutive
    boundary angles are returned together with the boundary normals.
    """
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    v = pts - np.asarray(x, dtype=np.float64).reshape(2)
    v = v[np.any(v != 0, axis=1)]
    if v.shape[0] == 0:
        return axis_directions(2)
    base = np.arctan2(v[:, 1], v[:, 0])
    crit = np.unique(np.mod(np.concatenate([base + np.pi / 2, base - np.pi / 2]), 2 * np.pi))
    nxt = np.append(crit[1:], crit[0] + 2 * np.pi)
    angles = np.concatenate([crit, (crit + nxt) / 2])
    return DirectionSet(np.column_stack([np.cos(angles), np.sin(angles)]), "pairwise")


def exact_depth_1d(values, x):
    """``min(#{v <= x}, #{v >= x}) / n``."""
    v = np.asarray(values, dtype=np.float64).reshape(-1)
    if v.size == 0:
        raise InputError("need at least one value")
    x = float(np.asarray(x, dtype=np.float64).reshape(-1)[0])
    return Fraction(int(min(np.sum(v <= x), np.sum(v >= x))), v.size)


def _integer_vectors(points, x):
    """Exact integer coordinates of ``points - x`` (common power-of-two scale)."""
    pts = np.asarray(points, dtype=np.float64)
    ratios = [[float(c).as_integer_ratio() for c in row] for row in pts]
    xr = [float(c).as_integer_ratio() for c in np.asarray(x, dtype=np.float64).reshape(-1)]
    scale = max([den for row in ratios for _, den in row] + [den for _, den in xr])
    xi = [num * (scale // den) for num, den in xr]
    return [tuple(num * (scale // den) - xi[k] for k, (num, den) in enumerate(row)) for row in ratios]


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def _angle_cmp(a, b):
    ha = 0 if a[1] > 0 or (a[1] == 0 and a[0] > 0) else 1
    hb = 0 if b[1] > 0 or (b[1] == 0 and b[0] > 0) else 1
    if ha != hb:
        return ha - hb
    c = _cross2(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _in_half_turn(a, b):
    """Angle from ``a`` to ``b`` (counter-clockwise) lies in [0, pi)."""
    c = _cross2(a, b)
    return c > 0 or (c == 0 and _dot(a, b) > 0)


def exact_depth_2d(points, x):
    """Exact bivariate halfspace depth by an angular sweep around ``x``."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    n = pts.shape[0]
    if n == 0:
        raise InputError("need at least one point")
    vecs = _integer_vectors(pts, x)
    nonzero = [v for v in vecs if v != (0, 0)]
    coincident = n - len(nonzero)
    L = len(nonzero)
    if L == 0:
        return Fraction(coincident, n)
    order = sorted(nonzero, key=cmp_to_key(_angle_cmp))
    best = 0
    j = 0
    for i in range(L):
        if i > 0 and _angle_cmp(order[i - 1], order[i]) == 0:
            continue  # only the first of a same-direction group starts a window
        j = max(j, i)
        while j < i + L and _in_half_turn(order[i], order[j % L]):
            j += 1
        best = max(best, j - i)
    return Fraction(coincident + L - best, n)


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _neg(v):
    return tuple(-c for c in v)


def _min_open_count(vecs, space):
    """Minimum over generic ``u`` in ``space`` of ``#{v : <u, v> > 0}``.

    ``space`` is ``("line", e)``, ``("plane", normal_or_None)`` or
    ``("space",)``; all ``vecs`` are non-zero and lie in it.  Every cell of
    the arrangement touches a ray where it can be evaluated, and the cells
    around a ray reduce to the same problem one dimension lower.
    """
    if not vecs:
        return 0
    kind = space[0]
    if kind == "line":
        pos = sum(1 for v in vecs if _dot(space[1], v) > 0)
        return min(pos, len(vecs) - pos)

    rays = []
    if kind == "plane":
        normal = space[1]
        for v in vecs:
            r = (-v[1], v[0]) if normal is None else _cross3(normal, v)
            rays.append((r, ("line", v)))
            rays.append((_neg(r), ("line", v)))
    else:
        for a, b in combinations(vecs, 2):
            r = _cross3(a, b)
            if any(r):
                rays.append((r, ("plane", r)))
                rays.append((_neg(r), ("plane", _neg(r))))
        if not rays:  # everything on one line
            return _min_open_count(vecs, ("line", vecs[0]))

    best = len(vecs)
    for r, sub in rays:
        pos = 0
        on = []
        for v in vecs:
            t = _dot(r, v)
            if t > 0:
                pos += 1
            elif t == 0:
                on.append(v)
        if pos >= best:
            continue
        best = min(best, pos + _min_open_count(on, sub))
    return best


def exact_depth_smalld(points, x):
    """Exact depth in d <= 3 by enumerating the direction arrangement (n <= 25)."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    n, d = pts.shape
    if n == 0:
        raise InputError("need at least one point")
    if n > SMALLD_MAX_N or d > SMALLD_MAX_D:
        raise CostGuardError(f"brute-force depth limited to n <= {SMALLD_MAX_N}, d <= {SMALLD_MAX_D}; "
                             f"got n={n}, d={d}")
    vecs = _integer_vectors(pts, x)
    nonzero = [v for v in vecs if any(v)]
    coincident = n - len(nonzero)
    space = {1: ("line", (1,)), 2: ("plane", None), 3: ("space",)}[d]
    return Fraction(coincident + _min_open_count(nonzero, space), n)


def direction_upper_bound(points, x, directions):
    """``min_u #{<u, x_i> <= <u, x>} / n`` over a finite direction set."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if not isinstance(directions, DirectionSet):
        directions = DirectionSet(directions, "sampled-uniform")
    proj = (pts - np.asarray(x, dtype=np.float64).reshape(-1)) @ directions.vectors.T
    return Fraction(int((proj <= 0).sum(axis=0).min()), pts.shape[0])

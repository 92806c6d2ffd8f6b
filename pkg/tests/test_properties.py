"""Randomized invariants (hypothesis, 100 examples each)."""

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from abcdepth.augmentation import augment
from abcdepth.core import DataSet, ball_contains, ball_radius, build_ball_system, build_distance_table
from abcdepth.engine import compute_level_sets, depth_of_sample_point, sample_depths, tukey_median
from abcdepth.oracle import direction_upper_bound, exact_depth_1d, exact_depth_2d, exact_depth_smalld, sample_directions
from abcdepth.synth import GeneratorSpec, generate

N_EXAMPLES = 100


@st.composite
def grid_data(draw, min_n=2, max_n=14, max_d=3, d=None):
    """Points on a dyadic grid (multiples of 1/4) so distances of isometric copies match exactly."""
    d = d or draw(st.integers(1, max_d))
    n = draw(st.integers(min_n, max_n))
    coords = draw(st.lists(st.integers(-16, 16), min_size=n * d, max_size=n * d))
    return np.array(coords, dtype=np.float64).reshape(n, d) / 4.0


@st.composite
def float_data(draw, min_n=2, max_n=20, max_d=3):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return np.random.Generator(np.random.PCG64(seed)).standard_normal((n, d))


settings_100 = settings(max_examples=N_EXAMPLES)


@settings_100
@given(float_data(), st.integers(0, 40), st.integers(0, 1000))
def test_level_sets_nested(pts, k, seed):
    data = DataSet(pts)
    res = tukey_median(data, k, seed=seed)
    for a, b in zip(res.levels, res.levels[1:]):
        assert set(b.members) <= set(a.members)
        assert b.ball_size < a.ball_size
    assert len(res.median_indices) >= 1


@settings_100
@given(float_data(), st.integers(1, 10), st.integers(0, 1000))
def test_center_monotonicity(pts, k, seed):
    data = DataSet(pts)
    base = build_ball_system(data)
    extra = augment(data, k, seed=seed, margin=1.0).artificial
    more = build_ball_system(data, extra_centers=extra)
    for i in range(data.n):
        assert depth_of_sample_point(data, more, i).depth_numerator <= depth_of_sample_point(data, base, i).depth_numerator


@settings_100
@given(grid_data(), st.randoms(use_true_random=False), st.integers(-40, 40))
def test_isometry_equivariance(pts, rnd, shift):
    n, d = pts.shape
    perm = list(range(d))
    rnd.shuffle(perm)
    signs = np.array([rnd.choice([-1.0, 1.0]) for _ in range(d)])
    offset = np.array([shift / 8.0 + k for k in range(d)])
    moved = pts[:, perm] * signs + offset
    extra = pts[::-1] * 0.5 + 0.25  # extra centers transformed alongside
    extra_moved = extra[:, perm] * signs + offset
    a, b = DataSet(pts), DataSet(moved)
    assert np.array_equal(build_distance_table(a).values, build_distance_table(b).values)
    sa = build_ball_system(a, extra_centers=extra)
    sb = build_ball_system(b, extra_centers=extra_moved)
    assert np.array_equal(sample_depths(a, sa), sample_depths(b, sb))
    la = compute_level_sets(a, sa)
    lb = compute_level_sets(b, sb)
    assert [(lv.ball_size, lv.members) for lv in la] == [(lv.ball_size, lv.members) for lv in lb]


@settings_100
@given(grid_data(max_n=12), st.data())
def test_closed_ball_boundary(pts, data):
    ds = DataSet(pts)
    s = build_ball_system(ds)
    c = data.draw(st.integers(0, ds.n - 1))
    m = data.draw(st.integers(1, ds.n))
    r = ball_radius(s, c, m)
    inside = [j for j in range(ds.n) if ball_contains(ds.points[c], r, ds.points[j])]
    assert len(inside) >= m
    # the point realizing the radius lies on the sphere and is inside
    on_sphere = [j for j in range(ds.n) if s.distances[c, j] == r]
    assert on_sphere and set(on_sphere) <= set(inside)
    if m > 1:
        assert ball_radius(s, c, m - 1) <= r


@settings_100
@given(float_data(max_n=10), st.integers(0, 200), st.integers(0, 2**63))
def test_augmentation_seed_determinism_and_prefix(pts, k, seed):
    data = DataSet(pts)
    a = augment(data, k, seed=seed)
    assert a == augment(data, k, seed=seed)
    assert np.all(a.domain.contains(a.artificial))
    big = augment(data, k + 7, seed=seed)
    assert np.array_equal(big.artificial[:k], a.artificial)


@settings_100
@given(st.sampled_from(["normal", "ring", "triangle"]), st.integers(1, 60), st.integers(1, 4),
       st.integers(0, 2**63))
def test_generator_seed_determinism(kind, n, d, seed):
    d = 2 if kind != "normal" else d
    spec = GeneratorSpec(kind, n=n, d=d, seed=seed)
    assert generate(spec) == generate(spec)


@settings_100
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=50, unique=True))
def test_1d_agreement(values):
    data = DataSet(np.array(values, dtype=float) / 8.0)
    s = build_ball_system(data)
    for i in range(data.n):
        exact = exact_depth_1d(data.points[:, 0], data.points[i, 0])
        assert Fraction(depth_of_sample_point(data, s, i).depth_numerator, data.n) == exact


@settings_100
@given(grid_data(min_n=1, max_n=12, d=2), st.integers(-16, 16), st.integers(-16, 16))
def test_exact_2d_matches_smalld(pts, qx, qy):
    for x in (pts[0], np.array([qx / 4.0, qy / 4.0])):
        assert exact_depth_2d(pts, x) == exact_depth_smalld(pts, x)


@settings_100
@given(float_data(min_n=3, max_n=20), st.integers(0, 1000))
def test_direction_bound_above_exact(pts, seed):
    pts2 = pts[:, :2] if pts.shape[1] >= 2 else np.column_stack([pts[:, 0], pts[:, 0] ** 2])
    dirs = sample_directions(2, 30, seed=seed)
    for x in pts2[:3]:
        assert direction_upper_bound(pts2, x, dirs) >= exact_depth_2d(pts2, x)

import numpy as np

from abcdepth.geometry import convex_hull_2d, polygon_area


def test_ccw_from_lexicographic_minimum():
    pts = [(1, 1), (0, 1), (0, 0), (1, 0), (0.5, 0.5), (0.5, 0)]
    hull = convex_hull_2d(pts)
    assert hull == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    assert polygon_area(hull) == 1.0


def test_duplicates_and_degenerate():
    assert convex_hull_2d([(2, 2), (2, 2)]) == [(2.0, 2.0)]
    assert convex_hull_2d([(0, 0), (3, 3), (1, 1), (2, 2)]) == [(0.0, 0.0), (3.0, 3.0)]
    assert polygon_area([(0, 0), (1, 1)]) == 0.0


def test_contains_all_points(rng):
    pts = rng.standard_normal((200, 2))
    hull = np.array(convex_hull_2d(pts))
    assert polygon_area(hull) > 0
    # every point is left of or on every CCW edge
    for a, b in zip(hull, np.roll(hull, -1, axis=0)):
        cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        assert np.all(cross >= -1e-12)


def test_order_independent(rng):
    pts = rng.standard_normal((50, 2))
    assert convex_hull_2d(pts) == convex_hull_2d(pts[::-1])

import numpy as np
import pytest

from abcdepth.core import (
    DataSet,
    TriangularDistanceTable,
    ball_contains,
    ball_radius,
    build_ball_system,
    build_distance_table,
    candidate_center_distances,
)
from abcdepth.errors import ContractError, InputError


class TestDataSet:
    def test_shape_and_order(self):
        ds = DataSet([[0, 1], [-1, 0], [1, 0]])
        assert (ds.n, ds.d) == (3, 2)
        assert ds[1].tolist() == [-1.0, 0.0]

    def test_one_dimensional_list_is_a_column(self):
        ds = DataSet([0.0, 1.0, 2.0])
        assert (ds.n, ds.d) == (3, 1)

    def test_repetitions_allowed(self):
        ds = DataSet([[1, 1], [1, 1]])
        assert ds.n == 2 and ds.is_degenerate()

    def test_immutable(self):
        ds = DataSet([[0.0, 0.0]])
        with pytest.raises(ValueError):
            ds.points[0, 0] = 1.0

    @pytest.mark.parametrize("bad", [[], [[0, 1], [2]], [[np.nan, 0]], [[np.inf]]])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(InputError):
            DataSet(bad)


class TestDistanceTable:
    def test_345(self):
        t = build_distance_table(DataSet([[0, 0], [3, 4]]))
        assert len(t) == 1 and t.lookup(1, 0) == 5.0

    def test_1d_entries(self):
        t = build_distance_table(DataSet([0.0, 1.0, 2.0]))
        assert t.lookup(1, 0) == 1.0
        assert t.lookup(2, 0) == 2.0
        assert t.lookup(2, 1) == 1.0

    def test_duplicates_give_zero(self):
        assert build_distance_table(DataSet([[1, 1], [1, 1]])).lookup(1, 0) == 0.0

    def test_symmetric_lookup_and_rows(self):
        t = build_distance_table(DataSet([[0, 0], [3, 4], [6, 8]]))
        assert t.lookup(0, 2) == t.lookup(2, 0) == 10.0
        assert t.lookup(1, 1) == 0.0
        assert t.row(2).tolist() == [10.0, 5.0]
        assert t.row(0).tolist() == []

    def test_single_point(self):
        t = build_distance_table(DataSet([[1.0, 2.0]]))
        assert len(t) == 0 and t.to_square().tolist() == [[0.0]]

    def test_square_matches_brute_force(self, rng):
        X = rng.standard_normal((30, 4))
        sq = build_distance_table(DataSet(X)).to_square()
        ref = np.sqrt(((X[:, None, :] - X[None, :, :]) ** 2).sum(-1))
        np.testing.assert_allclose(sq, ref, rtol=1e-14, atol=1e-14)

    def test_triangle_inequality(self, rng):
        sq = build_distance_table(DataSet(rng.standard_normal((15, 3)))).to_square()
        # d(i, k) <= d(i, j) + d(j, k) over axes (i, j, k)
        assert np.all(sq[:, None, :] <= sq[:, :, None] + sq[None, :, :] + 1e-12)

    def test_zero_iff_equal(self):
        t = build_distance_table(DataSet([[0, 0], [0, 0], [0, 1e-150]]))
        assert t.lookup(1, 0) == 0.0 and t.lookup(2, 0) > 0.0

    def test_scaling_by_two_is_exact(self, rng):
        X = rng.standard_normal((20, 3))
        a = build_distance_table(DataSet(X)).values
        b = build_distance_table(DataSet(2.0 * X)).values
        assert np.array_equal(b, 2.0 * a)

    def test_bad_size_rejected(self):
        with pytest.raises(InputError):
            TriangularDistanceTable(3, [1.0, 2.0])


class TestBallSystem:
    sample = DataSet([0.0, 1.0, 2.0, 10.0])

    def test_sample_center_row(self):
        s = build_ball_system(self.sample)
        assert s.sorted_distances[0].tolist() == [0.0, 1.0, 2.0, 10.0]

    def test_extra_center_row(self):
        s = build_ball_system(self.sample, extra_centers=[[5.0]])
        assert s.n_centers == 5
        assert s.sorted_distances[4].tolist() == [3.0, 4.0, 5.0, 5.0]

    def test_singleton(self):
        s = build_ball_system(DataSet([[3.0, 4.0]]))
        assert s.sorted_distances.tolist() == [[0.0]]

    def test_rows_sorted_and_start_at_zero(self, rng):
        data = DataSet(rng.standard_normal((40, 3)))
        s = build_ball_system(data, extra_centers=rng.standard_normal((7, 3)))
        assert s.sorted_distances.shape == (47, 40)
        assert np.all(np.diff(s.sorted_distances, axis=1) >= 0)
        assert np.all(s.sorted_distances[:40, 0] == 0.0)

    def test_wrong_dimension_extra_center(self):
        with pytest.raises(InputError):
            build_ball_system(self.sample, extra_centers=[[1.0, 2.0]])

    def test_table_mismatch(self):
        with pytest.raises(InputError):
            build_ball_system(self.sample, build_distance_table(DataSet([0.0, 1.0])))

    def test_radius_examples(self):
        s = build_ball_system(self.sample)
        assert ball_radius(s, 0, 3) == 2.0
        assert ball_radius(s, 2, 1) == 0.0
        assert ball_radius(s, 0, 4) == 10.0
        assert np.array_equal(s.radii(2), [1.0, 1.0, 1.0, 8.0])

    @pytest.mark.parametrize("m", [0, 5, -1])
    def test_radius_out_of_range(self, m):
        with pytest.raises(ContractError):
            ball_radius(build_ball_system(self.sample), 0, m)

    def test_radius_bad_center(self):
        with pytest.raises(IndexError):
            ball_radius(build_ball_system(self.sample), 4, 1)

    def test_ball_holds_at_least_m_points(self, rng):
        data = DataSet(np.round(rng.standard_normal((25, 2)), 1))  # rounding forces ties
        s = build_ball_system(data)
        for c in range(data.n):
            for m in range(1, data.n + 1):
                r = ball_radius(s, c, m)
                assert (s.distances[c] <= r).sum() >= m

    def test_candidate_distances_match_direct(self, rng):
        data = DataSet(rng.standard_normal((12, 3)))
        extra = rng.standard_normal((5, 3))
        s = build_ball_system(data, extra_centers=extra)
        full = candidate_center_distances(s)
        direct = candidate_center_distances(s, s.center_points)
        assert np.array_equal(full, direct)


class TestBallContains:
    def test_boundary_is_inside(self):
        assert ball_contains([0, 0], 5.0, [3, 4])

    def test_just_outside(self):
        assert not ball_contains([0, 0], 5.0, [3, 4.0001])

    def test_zero_radius_at_center(self):
        assert ball_contains([1.5, -2.0], 0.0, [1.5, -2.0])

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            ball_contains([0, 0], 1.0, [0, 0, 0])

    def test_radius_point_is_on_boundary(self, rng):
        data = DataSet(rng.standard_normal((30, 5)))
        s = build_ball_system(data)
        for c in range(data.n):
            for m in (1, 7, 30):
                r = ball_radius(s, c, m)
                j = int(np.flatnonzero(s.distances[c] == r)[0])
                assert ball_contains(data.points[c], r, data.points[j])

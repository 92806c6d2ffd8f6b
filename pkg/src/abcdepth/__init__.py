"""Approximate Tukey depth, level sets and median by intersecting closed balls."""

__version__ = "0.1.0"

from abcdepth.augmentation import AugmentedDataSet, Box, augment, bounding_domain
from abcdepth.core import (
    BallSystem,
    DataSet,
    TriangularDistanceTable,
    ball_contains,
    ball_radius,
    build_ball_system,
    build_distance_table,
)
from abcdepth.engine import (
    DepthResult,
    LevelSet,
    MedianResult,
    ball_size,
    compute_level_sets,
    contour_2d,
    depth_of_out_of_sample_point,
    depth_of_sample_point,
    sample_depths,
    tukey_median,
)
from abcdepth.errors import (
    ContractError,
    CostGuardError,
    CSVFormatError,
    InputError,
    UnsupportedDimensionError,
)
from abcdepth.kernels import BACKEND
from abcdepth.oracle import (
    DirectionSet,
    direction_upper_bound,
    exact_depth_1d,
    exact_depth_2d,
    exact_depth_smalld,
)
from abcdepth.stats import chi_square_cdf

__all__ = [
    "AugmentedDataSet", "BACKEND", "BallSystem", "Box", "ContractError", "CostGuardError",
    "CSVFormatError", "DataSet", "DepthResult", "DirectionSet", "InputError", "LevelSet",
    "MedianResult", "TriangularDistanceTable", "UnsupportedDimensionError", "augment",
    "ball_contains", "ball_radius", "ball_size", "bounding_domain", "build_ball_system",
    "build_distance_table", "chi_square_cdf", "compute_level_sets", "contour_2d",
    "depth_of_out_of_sample_point", "depth_of_sample_point", "direction_upper_bound",
    "exact_depth_1d", "exact_depth_2d", "exact_depth_smalld", "sample_depths", "tukey_median",
]

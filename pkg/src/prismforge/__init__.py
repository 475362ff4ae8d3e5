"""Exact search and verification of perfect quadrilateral right prisms."""

__version__ = "0.1.0"

from .arith import Rat, enumerate_rationals, half_angle, height, is_square, pyth_ratio, pyth_ratio_inverse
from .curves import Curve, add, find_points, mul, torsion
from .heights import compatible_heights, filter_heights, heights_from_point
from .shapes import DiagonalReport, PrismBase, PrismCandidate, Shape, candidate, classify

__all__ = [
    "Rat", "enumerate_rationals", "half_angle", "height", "is_square", "pyth_ratio",
    "pyth_ratio_inverse", "Curve", "add", "find_points", "mul", "torsion", "compatible_heights",
    "filter_heights", "heights_from_point", "DiagonalReport", "PrismBase", "PrismCandidate",
    "Shape", "candidate", "classify",
]

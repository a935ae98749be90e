"""Exact polynomial and truncated-series algebra in x and q."""

from .distribution import carlitz_eulerian, distribution_poly, multiset_des_maj_poly
from .factor import (
    ScanBounds,
    UnitaryFactor,
    cyclotomic,
    divide_unitary_binomial,
    unitary_candidate,
    unitary_factor_scan,
)
from .poly import BivariatePoly, exact_div
from .qanalog import lhs_series, lhs_series_b, lhs_series_d, q_binomial, q_factorial, q_int
from .series import TruncatedSeries, geometric_factor_inverse, series_eq, series_mul
from .sturm import SturmVerdict, count_real_roots, sturm_real_rooted, sturm_sequence

__all__ = [
    "BivariatePoly",
    "exact_div",
    "TruncatedSeries",
    "geometric_factor_inverse",
    "series_mul",
    "series_eq",
    "q_int",
    "q_factorial",
    "q_binomial",
    "lhs_series",
    "lhs_series_b",
    "lhs_series_d",
    "distribution_poly",
    "carlitz_eulerian",
    "multiset_des_maj_poly",
    "cyclotomic",
    "unitary_candidate",
    "ScanBounds",
    "UnitaryFactor",
    "unitary_factor_scan",
    "divide_unitary_binomial",
    "SturmVerdict",
    "sturm_sequence",
    "count_real_roots",
    "sturm_real_rooted",
]

"""Euler-Mahonian statistics on permutations, multiset permutations and the
hyperoctahedral groups, with exact bivariate generating-function checks."""

from .errors import DomainError, EulerMahonianError, NonDivisibleError, ResourceLimitError
from .perms import (
    Composition,
    DescentSubset,
    MultisetWord,
    Permutation,
    SignedPermutation,
    composition_to_R,
)
from .polyalg import BivariatePoly, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "BivariatePoly",
    "Composition",
    "DescentSubset",
    "DomainError",
    "EulerMahonianError",
    "MultisetWord",
    "NonDivisibleError",
    "Permutation",
    "ResourceLimitError",
    "SignedPermutation",
    "TruncatedSeries",
    "composition_to_R",
]

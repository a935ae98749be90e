"""q-integers, q-factorials, Gaussian binomials, and the series that the
Carlitz-type identities put on their left-hand side."""

from __future__ import annotations

from functools import lru_cache

from ..errors import DomainError
from ..perms import Composition
from . import univariate as up
from .poly import BivariatePoly
from .series import TruncatedSeries

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "lhs_series",
    "lhs_series_b",
    "lhs_series_d",
]


def _q_int(n: int) -> list[int]:
    return [1] * n


@lru_cache(maxsize=None)
def _q_factorial(n: int) -> tuple[int, ...]:
    out = [1]
    for i in range(1, n + 1):
        out = up.mul(out, _q_int(i))
    return tuple(out)


@lru_cache(maxsize=None)
def _q_binomial(n: int, k: int) -> tuple[int, ...]:
    den = up.mul(_q_factorial(n - k), _q_factorial(k))
    return tuple(up.divmod_exact(_q_factorial(n), den))


def q_int(n: int) -> BivariatePoly:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    if n < 0:
        raise DomainError("q_int needs n >= 0")
    return BivariatePoly.from_q_coeffs(_q_int(n))


def q_factorial(n: int) -> BivariatePoly:
    if n < 0:
        raise DomainError("q_factorial needs n >= 0")
    return BivariatePoly.from_q_coeffs(_q_factorial(n))


def q_binomial(n: int, k: int, strict: bool = True) -> BivariatePoly:
    """Gaussian binomial [n]!/([n-k]! [k]!), computed by exact division.

    With ``strict=False`` an out-of-range k gives 0 instead of raising.
    """
    if n < 0 or k < 0 or k > n:
        if strict:
            raise DomainError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
        return BivariatePoly.zero()
    return BivariatePoly.from_q_coeffs(_q_binomial(n, k))


def lhs_series(rho: Composition, cap: int) -> TruncatedSeries:
    """sum_k prod_j [rho_j + k choose k]_q x^k, through x^cap."""
    rows = []
    for k in range(cap + 1):
        c = [1]
        for p in rho.parts:
            c = up.mul(c, _q_binomial(p + k, k))
        rows.append(c)
    return TruncatedSeries(cap, rows)


def lhs_series_b(n: int, cap: int) -> TruncatedSeries:
    """sum_r [r+1]_q^n x^r, through x^cap."""
    return TruncatedSeries(cap, [up.power(_q_int(r + 1), n) for r in range(cap + 1)])


# the type B and type D identities share their left-hand side
lhs_series_d = lhs_series_b

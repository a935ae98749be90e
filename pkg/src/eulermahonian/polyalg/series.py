"""Power series in x, truncated at a fixed degree, with Z[q] coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DomainError
from . import univariate as up
from .poly import BivariatePoly

__all__ = [
    "TruncatedSeries",
    "geometric_factor_inverse",
    "series_mul",
    "series_eq",
]


class TruncatedSeries:
    """sum_{k <= K} c_k(q) x^k, with arithmetic exact modulo x^{K+1}.

    ``coeffs[k]`` is a dense list of q-coefficients.
    """

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap: int, coeffs: Iterable[Sequence[int]] = ()):
        if cap < 0:
            raise DomainError("truncation degree must be nonnegative")
        rows = [up.trim(c) for c in coeffs][: cap + 1]
        rows += [[] for _ in range(cap + 1 - len(rows))]
        self.cap = cap
        self.coeffs = rows

    @classmethod
    def one(cls, cap: int) -> TruncatedSeries:
        return cls(cap, [[1]])

    @classmethod
    def from_poly(cls, f: BivariatePoly, cap: int) -> TruncatedSeries:
        return cls(cap, f.rows())

    def coeff(self, k: int) -> list[int]:
        return list(self.coeffs[k]) if 0 <= k <= self.cap else []

    def truncate(self, cap: int) -> TruncatedSeries:
        if cap > self.cap:
            raise DomainError(f"cannot extend a series known to degree {self.cap} to {cap}")
        return TruncatedSeries(cap, self.coeffs)

    def to_poly(self) -> BivariatePoly:
        return BivariatePoly.from_rows(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        cap = min(self.cap, other.cap)
        return TruncatedSeries(cap, (up.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def first_difference(self, other: TruncatedSeries):
        return self.to_poly().first_difference(other.to_poly())

    def to_json(self) -> dict:
        return {"cap": self.cap, **self.to_poly().to_json()}

    @classmethod
    def from_json(cls, data) -> TruncatedSeries:
        return cls.from_poly(BivariatePoly.from_json(data), int(data["cap"]))

    def __str__(self):
        return f"{self.to_poly()} + O(x^{self.cap + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self.cap}, {self.coeffs!r})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    cap = min(a.cap, b.cap)
    out: list[list[int]] = [[] for _ in range(cap + 1)]
    for i in range(cap + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(cap + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = up.add(out[i + j], up.mul(ai, bj))
    return TruncatedSeries(cap, out)


def _geometric(a: int, b: int, cap: int) -> TruncatedSeries:
    # 1 / (1 - x^a q^b) = sum_k x^{ak} q^{bk}
    rows: list[list[int]] = [[] for _ in range(cap + 1)]
    for k in range(cap // a + 1):
        rows[a * k] = [0] * (b * k) + [1]
    return TruncatedSeries(cap, rows)


def geometric_factor_inverse(factors: Iterable[tuple[int, int]], cap: int) -> TruncatedSeries:
    """Series of 1 / prod (1 - x^a q^b), one geometric series per factor."""
    out = TruncatedSeries.one(cap)
    for a, b in factors:
        if a < 1:
            raise DomainError(f"factor (1 - x^{a} q^{b}) has no inverse in Z[q][[x]]")
        if b < 0:
            raise DomainError("q-exponent must be nonnegative")
        out = series_mul(out, _geometric(a, b, cap))
    return out


def series_eq(a: TruncatedSeries, b: TruncatedSeries, cap: int | None = None) -> bool:
    """Compare coefficient polynomials degree by degree up to ``cap``."""
    k = min(a.cap, b.cap) if cap is None else cap
    if k > a.cap or k > b.cap:
        raise DomainError(f"series known only to degree {min(a.cap, b.cap)}, asked for {k}")
    return all(a.coeffs[i] == b.coeffs[i] for i in range(k + 1))

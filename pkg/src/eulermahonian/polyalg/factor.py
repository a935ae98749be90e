"""Bounded search for unitary factors Phi_d(x^a q^b) of bivariate polynomials.

A univariate integer polynomial with all roots on the unit circle and a
unit leading coefficient is a product of cyclotomic polynomials, so a
unitary factor g(x^a q^b) is a product of Phi_d(x^a q^b).  The scan below
tests each such candidate inside explicit bounds; a negative result is
only as strong as the bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DomainError, NonDivisibleError
from . import univariate as up
from .poly import BivariatePoly, exact_div

__all__ = [
    "cyclotomic",
    "unitary_candidate",
    "ScanBounds",
    "UnitaryFactor",
    "unitary_factor_scan",
    "divide_unitary_binomial",
]


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = up.divmod_exact(num, _cyclotomic(e))
    return tuple(num)


def cyclotomic(d: int) -> list[int]:
    """Dense coefficients of the d-th cyclotomic polynomial."""
    if d < 1:
        raise DomainError("cyclotomic index must be >= 1")
    return list(_cyclotomic(d))


def unitary_candidate(d: int, a: int, b: int) -> BivariatePoly:
    """Phi_d(x^a q^b) as a bivariate polynomial."""
    if (a, b) == (0, 0) or a < 0 or b < 0:
        raise DomainError(f"exponent pair ({a}, {b}) must be nonnegative and nonzero")
    return BivariatePoly({(a * k, b * k): c for k, c in enumerate(cyclotomic(d)) if c})


@dataclass(frozen=True)
class ScanBounds:
    d_max: int = 12
    a_max: int = 4
    b_max: int | None = None  # None: the q-degree of the scanned polynomial

    def resolve(self, f: BivariatePoly) -> ScanBounds:
        if self.b_max is not None:
            return self
        return ScanBounds(self.d_max, self.a_max, max(f.q_degree(), 0))

    def to_json(self) -> dict:
        return {"d_max": self.d_max, "a_max": self.a_max, "b_max": self.b_max}


@dataclass(frozen=True)
class UnitaryFactor:
    d: int
    a: int
    b: int
    multiplicity: int = 1

    @property
    def poly(self) -> BivariatePoly:
        return unitary_candidate(self.d, self.a, self.b)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "a": self.a,
            "b": self.b,
            "multiplicity": self.multiplicity,
            "factor": str(self.poly),
        }

    def __str__(self):
        return f"Phi_{self.d}(x^{self.a} q^{self.b}) = {self.poly}"


def _try_div(f: BivariatePoly, g: BivariatePoly):
    try:
        return exact_div(f, g)
    except NonDivisibleError:
        return None


def unitary_factor_scan(f: BivariatePoly, bounds: ScanBounds | None = None) -> list[UnitaryFactor]:
    """Every Phi_d(x^a q^b) dividing f with d <= d_max, a <= a_max, b <= b_max.

    Candidates whose x- or q-degree exceeds that of f are skipped, as they
    cannot divide a nonzero f.  Results are ordered by (a, b, d).
    """
    if f.is_zero():
        raise DomainError("cannot scan the zero polynomial")
    bounds = (bounds or ScanBounds()).resolve(f)
    dx, dq = f.x_degree(), f.q_degree()
    found = []
    for a in range(bounds.a_max + 1):
        for b in range(bounds.b_max + 1):
            if (a, b) == (0, 0):
                continue
            for d in range(1, bounds.d_max + 1):
                phi_deg = len(_cyclotomic(d)) - 1
                if a * phi_deg > dx or b * phi_deg > dq:
                    continue
                g = unitary_candidate(d, a, b)
                mult, rest = 0, f
                while (h := _try_div(rest, g)) is not None:
                    mult += 1
                    rest = h
                if mult:
                    found.append(UnitaryFactor(d, a, b, mult))
    return found


def divide_unitary_binomial(f: BivariatePoly, a: int, b: int) -> BivariatePoly:
    """Exact quotient of f by 1 + x^a q^b; raises NonDivisibleError otherwise."""
    return exact_div(f, unitary_candidate(2, a, b))

"""Exact real-rootedness test via Sturm sequences over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DomainError
from . import univariate as up
from .poly import BivariatePoly

__all__ = ["SturmVerdict", "sturm_sequence", "count_real_roots", "sturm_real_rooted"]

ALL_REAL_SIMPLE_NEGATIVE = "all real simple negative"
NOT_REAL_SIMPLE_NEGATIVE = "not"


def _rem(a: list, b: list) -> list:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        k = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= k * c
        a = up.trim(a)
    return a


def sturm_sequence(p: Sequence[int]) -> list[list[Fraction]]:
    """p, p', then negated remainders until the last nonzero one."""
    p0 = [Fraction(c) for c in up.trim(p)]
    if not p0:
        raise DomainError("Sturm sequence of the zero polynomial")
    seq = [p0]
    p1 = [Fraction(c) for c in up.derivative(p0)]
    while p1:
        seq.append(p1)
        p1 = [-c for c in _rem(seq[-2], seq[-1])]
    return seq


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _at_minus_infinity(poly) -> int:
    return poly[-1] * (-1) ** (len(poly) - 1)


def count_real_roots(p: Sequence[int], lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None stands for -/+ infinity."""
    seq = sturm_sequence(p)
    v_lo = _sign_changes(
        [_at_minus_infinity(s) for s in seq] if lo is None else [up.evaluate(s, Fraction(lo)) for s in seq]
    )
    v_hi = _sign_changes(
        [s[-1] for s in seq] if hi is None else [up.evaluate(s, Fraction(hi)) for s in seq]
    )
    return v_lo - v_hi


@dataclass(frozen=True)
class SturmVerdict:
    verdict: str
    degree: int
    negative_roots: int  # distinct real roots in (-inf, 0)
    squarefree: bool

    @property
    def ok(self) -> bool:
        return self.verdict == ALL_REAL_SIMPLE_NEGATIVE

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "degree": self.degree,
            "negative_roots": self.negative_roots,
            "squarefree": self.squarefree,
        }


def _as_dense(p) -> list[int]:
    if isinstance(p, BivariatePoly):
        if p.q_degree() <= 0:
            return p.at_q(1)
        if p.x_degree() <= 0:
            return up.trim(p.rows()[0]) if p.rows() else []
        raise DomainError("expected a univariate polynomial")
    return up.trim(int(c) for c in p)


def sturm_real_rooted(p) -> SturmVerdict:
    """Decide whether every root of p is real, simple and negative.

    Roots in (-inf, 0) are counted with the Sturm sequence; simplicity
    holds iff the sequence ends in a constant, i.e. gcd(p, p') = 1.
    """
    dense = _as_dense(p)
    if not dense:
        raise DomainError("the zero polynomial has no root structure")
    seq = sturm_sequence(dense)
    deg = len(dense) - 1
    squarefree = len(seq[-1]) == 1
    if dense[0] == 0:
        # 0 is a root; count negative roots of p / t^k
        k = next(i for i, c in enumerate(dense) if c)
        negative = count_real_roots(dense[k:], None, 0)
        return SturmVerdict(NOT_REAL_SIMPLE_NEGATIVE, deg, negative, squarefree)
    negative = count_real_roots(dense, None, 0)
    ok = squarefree and negative == deg
    verdict = ALL_REAL_SIMPLE_NEGATIVE if ok else NOT_REAL_SIMPLE_NEGATIVE
    return SturmVerdict(verdict, deg, negative, squarefree)

"""Exact bivariate integer polynomials in x and q."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from ..errors import NonDivisibleError
from . import univariate as up

__all__ = ["BivariatePoly", "exact_div"]


class BivariatePoly:
    """A polynomial sum c_{ij} x^i q^j with arbitrary-precision integer coefficients.

    Stored sparsely as ``{(i, j): c}`` without zero coefficients, so two
    polynomials are equal exactly when their term maps are.  Instances are
    treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> BivariatePoly:
        # terms must already be zero-free
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> BivariatePoly:
        return cls._wrap({})

    @classmethod
    def one(cls) -> BivariatePoly:
        return cls._wrap({(0, 0): 1})

    @classmethod
    def monomial(cls, c: int = 1, i: int = 0, j: int = 0) -> BivariatePoly:
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> BivariatePoly:
        return cls._wrap({(1, 0): 1})

    @classmethod
    def q(cls) -> BivariatePoly:
        return cls._wrap({(0, 1): 1})

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[int], x_power: int = 0) -> BivariatePoly:
        return cls._wrap({(x_power, j): c for j, c in enumerate(coeffs) if c})

    @classmethod
    def from_x_coeffs(cls, coeffs: Iterable[int]) -> BivariatePoly:
        return cls._wrap({(i, 0): c for i, c in enumerate(coeffs) if c})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> BivariatePoly:
        """Inverse of :meth:`rows`: row i is the dense q-coefficient list of x^i."""
        terms = {}
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if c:
                    terms[(i, j)] = c
        return cls._wrap(terms)

    # -- inspection

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic by exponent pair) order."""
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def q_degree(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def rows(self) -> list[list[int]]:
        """Dense q-coefficient lists indexed by x-degree."""
        out = [[] for _ in range(self.x_degree() + 1)]
        for (i, j), c in self._terms.items():
            row = out[i]
            if len(row) <= j:
                row.extend([0] * (j + 1 - len(row)))
            row[j] = c
        return out

    def evaluate(self, x, q):
        return sum(c * x**i * q**j for (i, j), c in self._terms.items())

    def at_q(self, q_value: int) -> list[int]:
        """Dense x-coefficients after substituting q."""
        out = [0] * (self.x_degree() + 1)
        for (i, j), c in self._terms.items():
            out[i] += c * q_value**j
        return up.trim(out)

    def total(self) -> int:
        """Sum of coefficients (the value at x = q = 1)."""
        return sum(self._terms.values())

    def first_difference(self, other: BivariatePoly):
        """Smallest exponent pair where the coefficients differ, or None."""
        keys = sorted(set(self._terms) | set(other._terms))
        for k in keys:
            a, b = self.coeff(*k), other.coeff(*k)
            if a != b:
                return {"monomial": list(k), "lhs": a, "rhs": b}
        return None

    # -- arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, int):
            return BivariatePoly._wrap({(0, 0): other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BivariatePoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, j), c in self._terms.items():
            for (k, l), d in other._terms.items():
                out[(i + k, j + l)] += c * d
        return BivariatePoly._wrap({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = BivariatePoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __floordiv__(self, other):
        return exact_div(self, self._coerce(other))

    # -- serialization

    def to_json(self) -> dict:
        return {"terms": [[str(c), i, j] for (i, j), c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> BivariatePoly:
        return cls(((int(i), int(j)), int(c)) for c, i, j in data["terms"])

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"BivariatePoly({str(self)!r})"


def exact_div(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    """Return h with g*h == f, dividing in Z[q][x].

    Each step divides the leading x-coefficient of the running remainder by
    the leading x-coefficient of g in Z[q]; if g divides f these divisions
    are all exact, so any failure proves non-divisibility.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = f.rows()
    g_rows = g.rows()
    dg = len(g_rows) - 1
    lead = g_rows[dg]
    quot: list[list[int]] = [[] for _ in range(max(0, len(rem) - dg))]
    for i in range(len(rem) - 1, dg - 1, -1):
        if not rem[i]:
            continue
        try:
            h = up.divmod_exact(rem[i], lead)
        except NonDivisibleError:
            raise NonDivisibleError(
                f"{g} does not divide {f}", BivariatePoly.from_rows(rem)
            ) from None
        quot[i - dg] = h
        for k, gk in enumerate(g_rows):
            if gk:
                rem[i - dg + k] = up.sub(rem[i - dg + k], up.mul(h, gk))
    if any(rem[:dg]):
        raise NonDivisibleError(f"{g} does not divide {f}", BivariatePoly.from_rows(rem))
    return BivariatePoly.from_rows(quot)

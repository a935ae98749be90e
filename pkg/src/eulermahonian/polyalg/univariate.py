"""Dense univariate integer polynomials as lists of coefficients.

Index k holds the coefficient of t**k.  Every function returns a trimmed
list (no trailing zeros); the zero polynomial is ``[]``.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import NonDivisibleError

Coeffs = list  # list[int], lowest degree first


def trim(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(trim(a)) - 1


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a: Sequence[int], c: int) -> list[int]:
    return trim([c * v for v in a])


def shift(a: Sequence[int], k: int) -> list[int]:
    """Multiply by t**k."""
    a = trim(a)
    return [0] * k + a if a else []


def mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def derivative(a: Sequence[int]) -> list[int]:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: Sequence[int], t):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


def divmod_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient of an exact division in Z[t]; raises if b does not divide a."""
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db, lb = len(b) - 1, b[-1]
    rem = list(a)
    quot = [0] * max(0, len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        k, r = divmod(c, lb)
        if r:
            raise NonDivisibleError("leading coefficient not divisible", trim(rem))
        quot[i - db] = k
        for j, bj in enumerate(b):
            rem[i - db + j] -= k * bj
    rem = trim(rem)
    if rem:
        raise NonDivisibleError("nonzero remainder", rem)
    return trim(quot)


def power(a: Sequence[int], e: int) -> list[int]:
    out = [1]
    base = trim(a)
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out

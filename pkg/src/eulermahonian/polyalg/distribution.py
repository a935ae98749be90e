"""Joint distributions of statistic pairs as bivariate polynomials."""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Callable, Iterable

from ..errors import DomainError
from ..perms import Composition, enumerate_sn
from ..statistics import stat_function
from .poly import BivariatePoly

__all__ = ["distribution_poly", "carlitz_eulerian", "multiset_des_maj_poly"]


def _pair_function(stat_pair) -> Callable:
    if callable(stat_pair):
        return stat_pair
    first, second = stat_pair
    f = stat_function(first) if isinstance(first, str) else first
    g = stat_function(second) if isinstance(second, str) else second
    return lambda w: (f(w), g(w))


def distribution_poly(stream: Iterable, stat_pair) -> BivariatePoly:
    """sum over the stream of x^{s1(w)} q^{s2(w)}.

    ``stat_pair`` is a pair of statistic names or callables, or a single
    callable returning both values at once.
    """
    pair = _pair_function(stat_pair)
    counts = Counter(pair(w) for w in stream)
    for (a, b) in counts:
        if a < 0 or b < 0:
            raise DomainError(f"statistic value pair ({a}, {b}) is negative")
    return BivariatePoly(counts)


def carlitz_eulerian(n: int, cap: int | None = None) -> BivariatePoly:
    """A_n(x, q): the (des, maj) distribution over S_n, by enumeration."""
    return distribution_poly(enumerate_sn(n, cap), ("des", "maj"))


def multiset_des_maj_poly(rho: Composition) -> BivariatePoly:
    """(des, maj) distribution over the rearrangements of rho, by dynamic programming.

    Builds words letter by letter; the state is the multiset still to be
    placed together with the last letter, so the cost is polynomial in the
    number of sub-multisets rather than in the number of words.
    """
    m = rho.m
    start = tuple(rho.parts)
    # (remaining, last) -> {(des, maj): count}
    layer: dict = {(start, 0): {(0, 0): 1}}
    for t in range(rho.N):
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for (remaining, last), dist in layer.items():
            for b in range(1, m + 1):
                if not remaining[b - 1]:
                    continue
                rem = remaining[:b - 1] + (remaining[b - 1] - 1,) + remaining[b:]
                target = nxt[(rem, b)]
                if last > b:
                    for (d, mj), c in dist.items():
                        target[(d + 1, mj + t)] += c
                else:
                    for key, c in dist.items():
                        target[key] += c
        layer = nxt
    total: Counter = Counter()
    for dist in layer.values():
        total.update(dist)
    return BivariatePoly(total)

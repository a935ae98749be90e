"""Structure-preserving maps between the carriers.

Standardization of multiset words, minimal coset representatives of
parabolic quotients, the involution ``phi`` on two-block quotients, and
the sign decompositions of B_n and D_n.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DomainError
from .perms import (
    DescentSubset,
    MultisetWord,
    Permutation,
    SignedPermutation,
    _as_subset,
)

__all__ = [
    "standardize",
    "istd",
    "min_coset_rep",
    "m_set",
    "phi",
    "sy",
    "signs",
    "assemble_b",
    "d_decompose",
    "d_compose",
]


def standardize(w: MultisetWord) -> Permutation:
    """Relabel the copies of each letter left to right by consecutive integers."""
    next_label = []
    total = 1
    for p in w.rho.parts:
        next_label.append(total)
        total += p
    out = []
    for a in w.letters:
        out.append(next_label[a - 1])
        next_label[a - 1] += 1
    return Permutation._trusted(tuple(out))


def istd(w: MultisetWord) -> Permutation:
    """Inverse of the standardization; lands in the quotient S^R."""
    return standardize(w).inverse()


def min_coset_rep(p: Permutation, R) -> Permutation:
    """Sort the window ascending inside every block cut out by R."""
    R = _as_subset(p.n, R)
    w = p.window
    out: list[int] = []
    for a, b in R.blocks():
        out.extend(sorted(w[a:b]))
    return Permutation._trusted(tuple(out))


def _check_two_block(w: Permutation, r: int) -> None:
    if r < 1 or r % 2 == 0:
        raise DomainError(f"r must be a positive odd integer, got {r}")
    if w.n != 2 * r:
        raise DomainError(f"expected a permutation of [{2 * r}], got size {w.n}")
    win = w.window
    if any(win[i] > win[i + 1] for i in range(2 * r - 1) if i + 1 != r):
        raise DomainError(f"{w} is not in the quotient with descents only at {r}")


def m_set(w: Permutation, r: int) -> set[int]:
    """Values i in [r] such that i and i + r sit in different blocks of w."""
    _check_two_block(w, r)
    pos = w.inverse().window
    return {i for i in range(1, r + 1) if (pos[i - 1] <= r) != (pos[i + r - 1] <= r)}


def phi(w: Permutation, r: int) -> Permutation:
    """Swap the values iota and iota + r (iota = min M_w), then re-sort the blocks."""
    iota = min(m_set(w, r))
    swapped = tuple(
        iota + r if v == iota else iota if v == iota + r else v for v in w.window
    )
    return min_coset_rep(Permutation._trusted(swapped), DescentSubset(2 * r, frozenset({r})))


def sy(s: SignedPermutation) -> Permutation:
    """The ordinary permutation with the same relative order as the signed window."""
    rank = {v: i for i, v in enumerate(sorted(s.window), 1)}
    return Permutation._trusted(tuple(rank[v] for v in s.window))


def signs(s: SignedPermutation) -> frozenset[int]:
    """The set J of negative values occurring in the window."""
    return frozenset(v for v in s.window if v < 0)


def assemble_b(tau: Permutation, J: Iterable[int]) -> SignedPermutation:
    """Inverse of ``s -> (sy(s), signs(s))``."""
    J = frozenset(J)
    n = tau.n
    if any(j >= 0 or -j > n for j in J):
        raise DomainError(f"sign set {sorted(J)} must consist of values in [-{n}, -1]")
    values = sorted(-v if -v in J else v for v in range(1, n + 1))
    return SignedPermutation._trusted(tuple(values[t - 1] for t in tau.window))


def d_decompose(s: SignedPermutation) -> tuple[SignedPermutation, Permutation]:
    """Write s = alpha * tau with alpha descent-free in D_n and tau in S_n.

    tau records the relative order of the window and alpha is the sorted
    window, so ``alpha(tau(i)) == s(i)``.
    """
    if not s.is_even():
        raise DomainError(f"{s.window} is not in D_n")
    tau = sy(s)
    alpha = SignedPermutation._trusted(tuple(sorted(s.window)))
    return alpha, tau


def d_compose(alpha: SignedPermutation, tau: Permutation) -> SignedPermutation:
    return alpha * tau

"""Value types for permutations, signed permutations and multiset words,
plus lexicographic enumerators for every family summed over.

Windows are 1-indexed one-line notation: ``Permutation((4, 5, 2, 3, 6, 1))``
maps 1 to 4, 2 to 5, and so on.  Composition of permutations follows
``(s * t)(i) == s(t(i))``; a signed permutation extends to negative
arguments by ``s(-i) == -s(i)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, ResourceLimitError

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_SIGNED_CAP",
    "Permutation",
    "SignedPermutation",
    "Composition",
    "MultisetWord",
    "DescentSubset",
    "composition_to_R",
    "compositions",
    "multinomial",
    "enumerate_sn",
    "enumerate_multiset",
    "enumerate_quotient",
    "enumerate_inverse_descent_class",
    "enumerate_descent_class_exact",
    "enumerate_bn",
    "enumerate_dn",
    "enumerate_tn",
    "parse_window",
]

# default size caps (configuration, overridable per call)
DEFAULT_CAP = 10
DEFAULT_SIGNED_CAP = 8


def _check_cap(what: str, size: int, cap: int | None, default: int) -> None:
    limit = default if cap is None else cap
    if size > limit:
        raise ResourceLimitError(what, size, limit)


@dataclass(frozen=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise DomainError(f"not a permutation of [{len(window)}]: {window}")

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> Permutation:
        # skips validation; enumerators only
        p = object.__new__(cls)
        object.__setattr__(p, "window", window)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise DomainError("cannot compose permutations of different sizes")
        w = self.window
        return Permutation._trusted(tuple(w[j - 1] for j in other.window))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.window, 1):
            inv[v - 1] = i
        return Permutation._trusted(tuple(inv))

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.window))
        return ",".join(map(str, self.window))


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise DomainError(f"not a signed permutation of [{len(window)}]: {window}")

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> SignedPermutation:
        s = object.__new__(cls)
        object.__setattr__(s, "window", window)
        return s

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls._trusted(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self.window[-i - 1]
        return self.window[i - 1]

    def __mul__(self, other):
        if not isinstance(other, (Permutation, SignedPermutation)):
            return NotImplemented
        if other.n != self.n:
            raise DomainError("cannot compose permutations of different sizes")
        return SignedPermutation._trusted(tuple(self(j) for j in other.window))

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for i, v in enumerate(self.window, 1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation._trusted(tuple(inv))

    @property
    def neg_count(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def is_even(self) -> bool:
        """True iff the element lies in the even hyperoctahedral group D_n."""
        return self.neg_count % 2 == 0

    def __str__(self):
        return ",".join(map(str, self.window))


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts):
            raise DomainError(f"composition parts must be positive and nonempty: {parts}")

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @property
    def N(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class MultisetWord:
    letters: tuple[int, ...]
    rho: Composition

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        rho = self.rho
        if not isinstance(rho, Composition):
            rho = Composition(tuple(rho))
            object.__setattr__(self, "rho", rho)
        counts = [0] * rho.m
        for a in letters:
            if not 1 <= a <= rho.m:
                raise DomainError(f"letter {a} outside [1, {rho.m}]")
            counts[a - 1] += 1
        if tuple(counts) != rho.parts:
            raise DomainError(f"word {letters} does not have content {rho.parts}")

    @classmethod
    def _trusted(cls, letters: tuple[int, ...], rho: Composition) -> MultisetWord:
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "rho", rho)
        return w

    @classmethod
    def from_letters(cls, letters: Sequence[int]) -> MultisetWord:
        """Build a word, inferring its composition from letter counts."""
        letters = tuple(int(a) for a in letters)
        if not letters:
            raise DomainError("empty word")
        m = max(letters)
        return cls(letters, Composition(tuple(letters.count(a) for a in range(1, m + 1))))

    @property
    def N(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if self.rho.m <= 9:
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))


@dataclass(frozen=True)
class DescentSubset:
    """A subset of [1, N-1], used both for R (quotients) and J (descent classes)."""

    n: int
    positions: frozenset[int]

    def __post_init__(self):
        positions = frozenset(int(i) for i in self.positions)
        object.__setattr__(self, "positions", positions)
        bad = [i for i in positions if not 1 <= i <= self.n - 1]
        if bad:
            raise DomainError(f"positions {sorted(bad)} not in [1, {self.n - 1}]")

    @classmethod
    def full(cls, n: int) -> DescentSubset:
        return cls(n, frozenset(range(1, n)))

    def __iter__(self):
        return iter(sorted(self.positions))

    def __contains__(self, i):
        return i in self.positions

    def __len__(self):
        return len(self.positions)

    def sorted(self) -> list[int]:
        return sorted(self.positions)

    def blocks(self) -> list[tuple[int, int]]:
        """Half-open (start, stop) 0-based index ranges of the maximal blocks."""
        cuts = [0, *self.sorted(), self.n]
        return [(a, b) for a, b in zip(cuts, cuts[1:])]

    def subsets(self) -> Iterator[DescentSubset]:
        pos = self.sorted()
        for k in range(len(pos) + 1):
            for c in itertools.combinations(pos, k):
                yield DescentSubset(self.n, frozenset(c))


def _as_subset(n: int, R) -> DescentSubset:
    if isinstance(R, DescentSubset):
        if R.n != n:
            raise DomainError(f"subset built for N={R.n}, used with N={n}")
        return R
    return DescentSubset(n, frozenset(R))


def composition_to_R(rho: Composition) -> DescentSubset:
    """Interior partial sums of ``rho``; the full sum N is never included."""
    sums = list(itertools.accumulate(rho.parts))[:-1]
    return DescentSubset(rho.N, frozenset(sums))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, ordered by their sets of partial sums."""
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = [0, *cuts, n]
            yield Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def multinomial(rho: Composition) -> int:
    total, out = 0, 1
    for p in rho.parts:
        total += p
        out *= math.comb(total, p)
    return out


def enumerate_sn(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_cap("S_n", n, cap, DEFAULT_CAP)
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


def _next_multiset_perm(a: list[int]) -> bool:
    # in-place lexicographic successor; False once the last arrangement is passed
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def enumerate_multiset(rho: Composition, cap: int | None = None) -> Iterator[MultisetWord]:
    """Every rearrangement of 1^rho_1 ... m^rho_m, lexicographically."""
    _check_cap("S_rho", rho.N, cap, DEFAULT_CAP)
    letters = [a for a, p in enumerate(rho.parts, 1) for _ in range(p)]
    while True:
        yield MultisetWord._trusted(tuple(letters), rho)
        if not _next_multiset_perm(letters):
            return


def enumerate_quotient(n: int, R, cap: int | None = None) -> Iterator[Permutation]:
    """The quotient S^R = {w in S_n : Des(w) is a subset of R}, lexicographically.

    Members are increasing on every block cut out by R, so they are generated
    directly by distributing values into blocks.
    """
    R = _as_subset(n, R)
    _check_cap("S^R", n, cap, DEFAULT_CAP)
    sizes = [b - a for a, b in R.blocks()] if n else []

    def fill(k, available, prefix):
        if k == len(sizes):
            yield Permutation._trusted(tuple(prefix))
            return
        for chosen in itertools.combinations(available, sizes[k]):
            taken = set(chosen)
            rest = [v for v in available if v not in taken]
            yield from fill(k + 1, rest, prefix + list(chosen))

    yield from fill(0, list(range(1, n + 1)), [])


def enumerate_inverse_descent_class(n: int, R, cap: int | None = None) -> Iterator[Permutation]:
    """{w in S_n : Des(w^-1) is a subset of R}, lexicographically."""
    members = sorted(p.inverse().window for p in enumerate_quotient(n, R, cap))
    for w in members:
        yield Permutation._trusted(w)


def enumerate_descent_class_exact(n: int, J, cap: int | None = None) -> Iterator[Permutation]:
    """{w in S_n : Des(w) == J}, lexicographically."""
    J = _as_subset(n, J)
    for p in enumerate_quotient(n, J, cap):
        w = p.window
        if all(w[i - 1] > w[i] for i in J.positions):
            yield p


def enumerate_bn(n: int, cap: int | None = None) -> Iterator[SignedPermutation]:
    """The hyperoctahedral group B_n, lexicographic in the integer order of windows."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_cap("B_n", n, cap, DEFAULT_SIGNED_CAP)
    values = [*range(-n, 0), *range(1, n + 1)]
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec():
        if len(prefix) == n:
            yield SignedPermutation._trusted(tuple(prefix))
            return
        for v in values:
            if not used[abs(v)]:
                used[abs(v)] = True
                prefix.append(v)
                yield from rec()
                prefix.pop()
                used[abs(v)] = False

    yield from rec()


def enumerate_dn(n: int, cap: int | None = None) -> Iterator[SignedPermutation]:
    """The even hyperoctahedral group D_n (even number of negative entries)."""
    for s in enumerate_bn(n, cap):
        if s.is_even():
            yield s


def enumerate_tn(n: int, cap: int | None = None) -> Iterator[SignedPermutation]:
    """The descent-free elements of D_n: increasing windows with an even number of negatives."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _check_cap("T_n", n, cap, DEFAULT_SIGNED_CAP)
    windows = []
    for k in range(0, n + 1, 2):
        for negated in itertools.combinations(range(1, n + 1), k):
            neg = set(negated)
            windows.append(tuple(sorted(-v if v in neg else v for v in range(1, n + 1))))
    for w in sorted(windows):
        yield SignedPermutation._trusted(w)


def parse_window(text: str) -> tuple[int, ...]:
    """Parse ``"452361"``, ``"4,5,2,3,6,1"`` or ``"-2,1"`` into a tuple of ints."""
    text = text.strip().strip("[]()")
    if not text:
        return ()
    if "," in text or " " in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    if text.lstrip("-").isdigit() and not text.startswith("-"):
        return tuple(int(c) for c in text)
    return (int(text),)

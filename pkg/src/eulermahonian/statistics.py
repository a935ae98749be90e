"""Permutation statistics on S_n, B_n, D_n and multiset words.

Every function here is pure and works directly on windows.  Descents and
inversions on signed windows use the ordinary integer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError
from .perms import MultisetWord, Permutation, SignedPermutation

__all__ = [
    "LehmerCode",
    "descent_set",
    "des",
    "maj",
    "inv",
    "classical_stats",
    "lehmer_code",
    "decode_lehmer",
    "sta",
    "stc",
    "mstc",
    "nsp",
    "signed_stats",
    "d_stats",
    "all_stats",
    "STAT_NAMES",
    "stat_function",
]

# A StatRecord is a plain dict keyed by statistic name.
StatRecord = dict


def _seq(w) -> Sequence[int]:
    if isinstance(w, (Permutation, SignedPermutation)):
        return w.window
    if isinstance(w, MultisetWord):
        return w.letters
    return w


def descent_set(w) -> list[int]:
    """Positions i (1-based) with w_i > w_{i+1}."""
    s = _seq(w)
    return [i for i in range(1, len(s)) if s[i - 1] > s[i]]


def des(w) -> int:
    return len(descent_set(w))


def maj(w) -> int:
    return sum(descent_set(w))


def inv(w) -> int:
    s = _seq(w)
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def classical_stats(w) -> StatRecord:
    ds = descent_set(w)
    return {"des_set": ds, "des": len(ds), "maj": sum(ds), "inv": inv(w)}


@dataclass(frozen=True)
class LehmerCode:
    """Digits c_1 ... c_N with 0 <= c_i <= N - i."""

    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(c) for c in self.digits)
        object.__setattr__(self, "digits", digits)
        n = len(digits)
        for i, c in enumerate(digits, 1):
            if not 0 <= c <= n - i:
                raise DomainError(f"code digit c_{i}={c} outside [0, {n - i}]")

    @classmethod
    def _trusted(cls, digits: tuple[int, ...]) -> LehmerCode:
        c = object.__new__(cls)
        object.__setattr__(c, "digits", digits)
        return c

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def decode(self) -> Permutation:
        return decode_lehmer(self)

    def __str__(self):
        if all(c < 10 for c in self.digits):
            return "".join(map(str, self.digits))
        return ",".join(map(str, self.digits))


def _code(s: Sequence[int]) -> tuple[int, ...]:
    n = len(s)
    return tuple(sum(1 for j in range(i + 1, n) if s[j] < s[i]) for i in range(n))


def lehmer_code(p) -> LehmerCode:
    """c_i = number of later positions holding a smaller value."""
    return LehmerCode._trusted(_code(_seq(p)))


def decode_lehmer(code) -> Permutation:
    digits = code.digits if isinstance(code, LehmerCode) else LehmerCode(tuple(code)).digits
    remaining = list(range(1, len(digits) + 1))
    return Permutation(tuple(remaining.pop(c) for c in digits))


def sta(word: Sequence[int]) -> int:
    """Length of the longest subsequence dominating (r-1, r-2, ..., 1, 0) entrywise.

    Reading right to left, a letter can extend the current staircase of
    length k exactly when it exceeds k; taking it greedily is optimal.
    """
    k = 0
    for v in reversed(tuple(word)):
        if v > k:
            k += 1
    return k


def stc(p) -> int:
    if isinstance(p, MultisetWord):
        raise DomainError("stc is defined on permutations; use mstc for words")
    return sta(_code(_seq(p)))


def mstc(w: MultisetWord) -> int:
    """stc of the inverse standardization of a multiset word."""
    from .bijections import istd

    return stc(istd(w))


def nsp(s) -> int:
    """Number of pairs i < j with s(i) + s(j) < 0."""
    w = _seq(s)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)


def signed_stats(s: SignedPermutation) -> StatRecord:
    w = s.window
    ds = descent_set(w)
    neg_set = [i for i, v in enumerate(w, 1) if v < 0]
    neg = len(neg_set)
    n_inv = inv(w)
    n_sp = nsp(w)
    st = stc(s)
    return {
        "des_set": ds,
        "des": len(ds),
        "maj": sum(ds),
        "inv": n_inv,
        "stc": st,
        "neg_set": neg_set,
        "neg": neg,
        "nsp": n_sp,
        "length_B": n_inv + neg + n_sp,
        "ndes": len(ds) + neg,
        "nmaj": sum(ds) - sum(w[i - 1] for i in neg_set),
        "nstc": st + neg,
    }


def d_stats(s: SignedPermutation) -> StatRecord:
    """Type-D statistics.

    ``dneg_set`` holds the positions i with s(i) < -1.  Each such position
    contributes ``-(s(i) + 1)`` to dmaj, i.e. |s(i)| - 1.
    """
    if not s.is_even():
        raise DomainError(f"{s.window} has an odd number of negative entries, not in D_n")
    w = s.window
    ds = descent_set(w)
    dneg_set = [i for i, v in enumerate(w, 1) if v < -1]
    neg = sum(1 for v in w if v < 0)
    epsilon = -1 if -1 in w else 0
    st = stc(s)
    return {
        "dneg_set": dneg_set,
        "dneg": len(dneg_set),
        "epsilon": epsilon,
        "ddes": len(ds) + len(dneg_set),
        "dmaj": sum(ds) - sum(w[i - 1] + 1 for i in dneg_set),
        "dstc": st + neg + epsilon,
        "length_D": inv(w) + nsp(w),
    }


def all_stats(x) -> StatRecord:
    """Every statistic defined on the carrier, as one flat record."""
    if isinstance(x, Permutation):
        ds = descent_set(x)
        n_inv = inv(x)
        return {
            "des": len(ds),
            "maj": sum(ds),
            "inv": n_inv,
            "stc": stc(x),
            "code": list(_code(x.window)),
            "des_set": ds,
            "length": n_inv,
        }
    if isinstance(x, SignedPermutation):
        rec = signed_stats(x)
        rec["code"] = list(_code(x.window))
        if x.is_even():
            rec.update(d_stats(x))
        return rec
    if isinstance(x, MultisetWord):
        rec = classical_stats(x)
        rec["mstc"] = mstc(x)
        return rec
    raise DomainError(f"unsupported carrier {type(x).__name__}")


def _signed_only(f):
    def g(x):
        if not isinstance(x, SignedPermutation):
            raise DomainError(f"statistic needs a signed permutation, got {type(x).__name__}")
        return f(x)
    return g


def _even_only(key):
    def g(x):
        if not isinstance(x, SignedPermutation):
            raise DomainError(f"{key} needs an even signed permutation, got {type(x).__name__}")
        return d_stats(x)[key]
    return g


def _length(x):
    if isinstance(x, SignedPermutation):
        return inv(x) + x.neg_count + nsp(x)
    if isinstance(x, Permutation):
        return inv(x)
    raise DomainError("length is defined on permutations and signed permutations")


def _no_words(f):
    def g(x):
        if isinstance(x, MultisetWord):
            raise DomainError("statistic not defined on multiset words")
        return f(x)
    return g


def _words_only(f):
    def g(x):
        if not isinstance(x, MultisetWord):
            raise DomainError("statistic only defined on multiset words")
        return f(x)
    return g


def _neg(x):
    return x.neg_count


def _ndes(x):
    return des(x) + x.neg_count


def _nmaj(x):
    return maj(x) - sum(v for v in x.window if v < 0)


def _nstc(x):
    return stc(x) + x.neg_count


_REGISTRY: dict[str, Callable] = {
    "des": des,
    "maj": maj,
    "inv": inv,
    "stc": _no_words(stc),
    "length": _length,
    "mstc": _words_only(mstc),
    "neg": _signed_only(_neg),
    "nsp": _signed_only(nsp),
    "length_B": _signed_only(_length),
    "ndes": _signed_only(_ndes),
    "nmaj": _signed_only(_nmaj),
    "nstc": _signed_only(_nstc),
    "dneg": _even_only("dneg"),
    "epsilon": _even_only("epsilon"),
    "ddes": _even_only("ddes"),
    "dmaj": _even_only("dmaj"),
    "dstc": _even_only("dstc"),
    "length_D": _even_only("length_D"),
}

STAT_NAMES = tuple(_REGISTRY)


def stat_function(name: str) -> Callable:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown statistic {name!r}; known: {', '.join(STAT_NAMES)}") from None

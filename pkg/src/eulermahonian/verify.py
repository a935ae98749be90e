"""Exhaustive checks of the equidistribution and generating-function identities.

Each ``verify_*`` function computes the two sides of one identity along
independent code paths (enumeration on one side, a different enumeration or
a closed form on the other) and returns a :class:`VerificationReport`.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import statistics as st
from .bijections import d_decompose, phi, sy
from .errors import DomainError, NonDivisibleError, ResourceLimitError
from .perms import (
    Composition,
    DescentSubset,
    composition_to_R,
    compositions,
    enumerate_bn,
    enumerate_descent_class_exact,
    enumerate_dn,
    enumerate_multiset,
    enumerate_quotient,
    enumerate_sn,
    enumerate_tn,
    multinomial,
)
from .polyalg import (
    BivariatePoly,
    ScanBounds,
    TruncatedSeries,
    carlitz_eulerian,
    distribution_poly,
    divide_unitary_binomial,
    geometric_factor_inverse,
    lhs_series,
    lhs_series_b,
    lhs_series_d,
    multiset_des_maj_poly,
    series_eq,
    sturm_real_rooted,
    unitary_candidate,
    unitary_factor_scan,
)

log = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class VerifyCaps:
    """Largest sizes the checks will enumerate exhaustively."""

    sn: int = 8
    multiset: int = 9
    signed: int = 5
    series: int = 8
    factorization_r: int = 7


DEFAULT_CAPS = VerifyCaps()


def _cap(caps: VerifyCaps | None, family: str, size: int) -> int:
    caps = caps or DEFAULT_CAPS
    limit = getattr(caps, family)
    if size > limit:
        raise ResourceLimitError(family, size, limit)
    return limit


@dataclass
class VerificationReport:
    check: str
    params: dict
    verdict: str
    lhs: BivariatePoly | TruncatedSeries | None = None
    rhs: BivariatePoly | TruncatedSeries | None = None
    counts: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    subchecks: list = field(default_factory=list)
    first_difference: dict | None = None
    witness: list | None = None
    informational: bool = False  # a failing informational check is a finding, not a defect
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self, timing: bool = False) -> dict:
        out = {"check": self.check, "params": self.params, "verdict": self.verdict}
        if self.lhs is not None:
            out["lhs"] = self.lhs.to_json()
        if self.rhs is not None:
            out["rhs"] = self.rhs.to_json()
        if self.counts:
            out["counts"] = self.counts
        if self.details:
            out["details"] = self.details
        if self.subchecks:
            out["subchecks"] = [s.to_json(timing) for s in self.subchecks]
        if self.first_difference is not None:
            out["first_difference"] = self.first_difference
        if self.witness is not None:
            out["witness"] = self.witness
        if self.informational:
            out["informational"] = True
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        params = " ".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        tag = self.verdict.upper()
        if self.informational and not self.passed:
            tag = "FINDING"
        return f"{tag:7} {self.check} {params}".rstrip()


def _fmt_param(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        log.debug("%s in %.3fs", report.summary(), report.elapsed)
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def _compare(check, params, lhs, rhs, *, counts=None, details=None, subchecks=(), witness_fn=None, cap=None):
    if isinstance(lhs, TruncatedSeries):
        equal = series_eq(lhs, rhs, cap)
    else:
        equal = lhs == rhs
    subchecks = list(subchecks)
    verdict = PASS if equal and all(s.passed for s in subchecks) else FAIL
    report = VerificationReport(
        check, params, verdict, lhs, rhs, dict(counts or {}), dict(details or {}), subchecks
    )
    if not equal:
        report.first_difference = lhs.first_difference(rhs)
        if witness_fn is not None and report.first_difference is not None:
            report.witness = witness_fn(tuple(report.first_difference["monomial"]))
    return report


def _witness(streams: Iterable[tuple[Callable[[], Iterable], Callable]]):
    """Lex-first element of any stream whose statistic pair hits the monomial."""
    def find(monomial):
        for make_stream, pair in streams:
            for w in make_stream():
                if pair(w) == monomial:
                    return list(w)
        return None
    return find


def _pair(a: str, b: str):
    f, g = st.stat_function(a), st.stat_function(b)
    return lambda w: (f(w), g(w))


def _product_one_plus(exps: Iterable[int]) -> BivariatePoly:
    """prod (1 + x q^i)."""
    out = BivariatePoly.one()
    for i in exps:
        out = out * BivariatePoly({(0, 0): 1, (1, i): 1})
    return out


# -- type A and multiset identities


@_timed
def verify_ska(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """(des, maj) and (stc, inv) have the same joint distribution on S_n."""
    cap = _cap(caps, "sn", n)
    des_maj = _pair("des", "maj")
    stc_inv = _pair("stc", "inv")
    lhs = distribution_poly(enumerate_sn(n, cap), des_maj)
    rhs = distribution_poly(enumerate_sn(n, cap), stc_inv)
    stream = lambda: enumerate_sn(n, cap)  # noqa: E731
    return _compare(
        "ska", {"n": n}, lhs, rhs,
        counts={"S_n": lhs.total()},
        witness_fn=_witness([(stream, des_maj), (stream, stc_inv)]),
    )


@_timed
def verify_fh(n: int, J: Iterable[int], caps: VerifyCaps | None = None) -> VerificationReport:
    """Over {w : Des(w) = J}: (des, maj) of w^-1 against (stc, inv) of w."""
    cap = _cap(caps, "sn", n)
    J = DescentSubset(n, frozenset(J))
    inv_des_maj = lambda w: (st.des(w.inverse()), st.maj(w.inverse()))  # noqa: E731
    stc_inv = _pair("stc", "inv")
    stream = lambda: enumerate_descent_class_exact(n, J, cap)  # noqa: E731
    lhs = distribution_poly(stream(), inv_des_maj)
    rhs = distribution_poly(stream(), stc_inv)
    return _compare(
        "fh", {"n": n, "J": J.sorted()}, lhs, rhs,
        counts={"descent_class": lhs.total()},
        witness_fn=_witness([(stream, inv_des_maj), (stream, stc_inv)]),
    )


@_timed
def verify_fh_all(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """verify_fh for every J in [n-1]; passes iff every class passes."""
    subs = [verify_fh(n, J, caps) for J in DescentSubset.full(n).subsets()]
    verdict = PASS if all(s.passed for s in subs) else FAIL
    total = sum(s.counts["descent_class"] for s in subs)
    return VerificationReport(
        "fh_all", {"n": n}, verdict, counts={"classes": len(subs), "S_n": total}, subchecks=subs
    )


@_timed
def verify_equi(rho: Composition, caps: VerifyCaps | None = None) -> VerificationReport:
    """(des, maj) on the words of rho against (stc, inv) on the quotient S^R."""
    cap = _cap(caps, "multiset", rho.N)
    R = composition_to_R(rho)
    des_maj = _pair("des", "maj")
    stc_inv = _pair("stc", "inv")
    words = lambda: enumerate_multiset(rho, cap)  # noqa: E731
    quotient = lambda: enumerate_quotient(rho.N, R, cap)  # noqa: E731
    lhs = distribution_poly(words(), des_maj)
    rhs = distribution_poly(quotient(), stc_inv)
    mstc_side = distribution_poly(words(), _pair("mstc", "inv"))
    sub = _compare("equi_mstc", {"rho": list(rho.parts)}, lhs, mstc_side)
    return _compare(
        "equi", {"rho": list(rho.parts)}, lhs, rhs,
        counts={"S_rho": lhs.total(), "S^R": rhs.total()},
        details={"R": R.sorted()},
        subchecks=[sub],
        witness_fn=_witness([(words, des_maj), (quotient, stc_inv)]),
    )


def _mmpart_denominator(N: int, K: int) -> TruncatedSeries:
    return geometric_factor_inverse([(1, i) for i in range(N + 1)], K)


def _series_check(name, params, lhs, numerator, denominator_inverse, K, counts, subchecks=()):
    rhs = TruncatedSeries.from_poly(numerator, K) * denominator_inverse
    return _compare(name, params, lhs, rhs, counts=counts, subchecks=subchecks, cap=K)


@_timed
def verify_mmpart(rho: Composition, K: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """MacMahon: sum_k prod_j [rho_j+k, k]_q x^k = C_rho / prod_{i=0}^N (1 - x q^i)."""
    cap = _cap(caps, "multiset", rho.N)
    _cap(caps, "series", K)
    C = distribution_poly(enumerate_multiset(rho, cap), _pair("des", "maj"))
    return _series_check(
        "mmpart", {"rho": list(rho.parts), "K": K},
        lhs_series(rho, K), C, _mmpart_denominator(rho.N, K), K, {"S_rho": C.total()},
    )


@_timed
def verify_mstc(rho: Composition, K: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """MacMahon's identity with (mstc, inv) in place of (des, maj)."""
    cap = _cap(caps, "multiset", rho.N)
    _cap(caps, "series", K)
    C = distribution_poly(enumerate_multiset(rho, cap), _pair("mstc", "inv"))
    return _series_check(
        "mstc", {"rho": list(rho.parts), "K": K},
        lhs_series(rho, K), C, _mmpart_denominator(rho.N, K), K, {"S_rho": C.total()},
    )


# -- factorization for two equal odd blocks, and the conjecture


@_timed
def verify_factorization(r: int, caps: VerifyCaps | None = None, bounds: ScanBounds | None = None) -> VerificationReport:
    """C_{(r,r)} = (1 + x q^r) * quotient, audited through the involution phi."""
    if r < 1 or r % 2 == 0:
        raise DomainError(f"the factorization needs odd r, got {r}")
    _cap(caps, "factorization_r", r)
    rho = Composition((r, r))
    cap = rho.N
    C = distribution_poly(enumerate_multiset(rho, cap), _pair("des", "maj"))
    params = {"r": r}
    factor = unitary_candidate(2, 1, r)
    try:
        quotient = divide_unitary_binomial(C, 1, r)
    except NonDivisibleError as exc:
        return VerificationReport(
            "factorization", params, FAIL, C, factor,
            counts={"S_rho": C.total()},
            details={"remainder": exc.remainder.to_json() if exc.remainder is not None else None},
        )

    # phi audit on the quotient S^{r} of S_{2r}
    R = DescentSubset(2 * r, frozenset({r}))
    lower = {}
    audited = 0
    bad = None
    for w in enumerate_quotient(2 * r, R, cap):
        audited += 1
        p = phi(w, r)
        d_inv = st.inv(p) - st.inv(w)
        d_stc = st.stc(p) - st.stc(w)
        if phi(p, r) != w or abs(d_inv) != r or abs(d_stc) != 1 or d_inv * d_stc < 0:
            bad = bad or {"w": list(w), "phi": list(p), "d_inv": d_inv, "d_stc": d_stc}
            continue
        if d_stc > 0:
            key = (st.stc(w), st.inv(w))
            lower[key] = lower.get(key, 0) + 1
    lower_poly = BivariatePoly(lower)
    audit = VerificationReport(
        "phi_audit", params, PASS if bad is None else FAIL,
        counts={"S^R": audited, "orbits": lower_poly.total()},
        witness=None if bad is None else [bad],
    )
    orbit_sum = _compare("phi_orbit_sum", params, quotient, lower_poly)
    bounds = bounds or ScanBounds(b_max=2 * rho.N)
    found = unitary_factor_scan(quotient, bounds)
    no_unitary = VerificationReport(
        "quotient_unitary_scan", params, PASS if not found else FAIL,
        details={"bounds": bounds.to_json(), "found": [f.to_json() for f in found]},
        informational=True,
    )
    report = _compare(
        "factorization", params, factor * quotient, C,
        counts={"S_rho": C.total()},
        details={"quotient": quotient.to_json(), "quotient_text": str(quotient)},
        subchecks=[audit, orbit_sum],
    )
    report.subchecks.append(no_unitary)
    return report


def conjecture_prediction(rho: Composition) -> BivariatePoly:
    """The predicted unitary part: 1 + x q^{rm/2} for (r,...,r) with r odd and m even, else 1."""
    parts = rho.parts
    r, m = parts[0], len(parts)
    if all(p == r for p in parts) and r % 2 == 1 and m % 2 == 0:
        return unitary_candidate(2, 1, r * m // 2)
    return BivariatePoly.one()


@_timed
def conjecture_scan(rho: Composition, bounds: ScanBounds | None = None) -> VerificationReport:
    """Compare the unitary factors found in C_rho with the conjectured ones.

    C_rho comes from a dynamic program over prefixes, so large symmetric
    cases stay cheap.  A mismatch is reported as a finding.
    """
    C = multiset_des_maj_poly(rho)
    bounds = bounds or ScanBounds(b_max=2 * rho.N)
    found = unitary_factor_scan(C, bounds)
    found_part = BivariatePoly.one()
    for f in found:
        found_part = found_part * f.poly**f.multiplicity
    predicted = conjecture_prediction(rho)
    report = _compare(
        "conjecture", {"rho": list(rho.parts)}, predicted, found_part,
        counts={"S_rho": multinomial(rho)},
        details={"bounds": bounds.to_json(), "found": [f.to_json() for f in found]},
    )
    report.informational = True
    return report


# -- types B and D


def _b_pairs():
    def nstc_len(s):
        r = st.signed_stats(s)
        return r["nstc"], r["length_B"]

    def ndes_nmaj(s):
        r = st.signed_stats(s)
        return r["ndes"], r["nmaj"]

    return nstc_len, ndes_nmaj


def _d_pairs():
    def dstc_len(s):
        r = st.d_stats(s)
        return r["dstc"], r["length_D"]

    def ddes_dmaj(s):
        r = st.d_stats(s)
        return r["ddes"], r["dmaj"]

    return dstc_len, ddes_dmaj


@_timed
def verify_b(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """(nstc, length) against (ndes, nmaj) on B_n, plus the product form prod(1 + x q^i) A_n."""
    cap = _cap(caps, "signed", n)
    nstc_len, ndes_nmaj = _b_pairs()
    stream = lambda: enumerate_bn(n, cap)  # noqa: E731
    lhs = distribution_poly(stream(), nstc_len)
    rhs = distribution_poly(stream(), ndes_nmaj)
    product = _product_one_plus(range(1, n + 1)) * carlitz_eulerian(n, max(n, 0))
    sub = _compare("b_product", {"n": n}, rhs, product)
    return _compare(
        "b", {"n": n}, lhs, rhs,
        counts={"B_n": lhs.total()},
        subchecks=[sub],
        witness_fn=_witness([(stream, nstc_len), (stream, ndes_nmaj)]),
    )


def _b_denominator(n: int, K: int) -> TruncatedSeries:
    return geometric_factor_inverse([(1, 0)] + [(2, 2 * i) for i in range(1, n + 1)], K)


def _d_denominator(n: int, K: int) -> TruncatedSeries:
    return geometric_factor_inverse([(1, 0), (1, n)] + [(2, 2 * i) for i in range(1, n)], K)


@_timed
def verify_b_carlitz(n: int, K: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """sum_r [r+1]_q^n x^r = (nstc, length) distribution / (1-x) prod (1 - x^2 q^{2i})."""
    cap = _cap(caps, "signed", n)
    _cap(caps, "series", K)
    nstc_len, ndes_nmaj = _b_pairs()
    lhs = lhs_series_b(n, K)
    den = _b_denominator(n, K)
    num = distribution_poly(enumerate_bn(n, cap), nstc_len)
    classical = _series_check(
        "b_carlitz_ndes", {"n": n, "K": K}, lhs,
        distribution_poly(enumerate_bn(n, cap), ndes_nmaj), den, K, {"B_n": num.total()},
    )
    return _series_check(
        "b_carlitz", {"n": n, "K": K}, lhs, num, den, K, {"B_n": num.total()}, [classical]
    )


@_timed
def verify_tn(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """sum over T_n of x^{neg + epsilon} q^{nsp} = prod_{i=1}^{n-1} (1 + x q^i)."""
    cap = _cap(caps, "signed", n)
    lhs = distribution_poly(
        enumerate_tn(n, cap),
        lambda a: (a.neg_count + st.d_stats(a)["epsilon"], st.nsp(a)),
    )
    rhs = _product_one_plus(range(1, n))
    return _compare("tn", {"n": n}, lhs, rhs, counts={"T_n": lhs.total()})


@_timed
def verify_d(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """(dstc, length) against (ddes, dmaj) on D_n, with the product form and the T_n factor."""
    cap = _cap(caps, "signed", n)
    dstc_len, ddes_dmaj = _d_pairs()
    stream = lambda: enumerate_dn(n, cap)  # noqa: E731
    lhs = distribution_poly(stream(), dstc_len)
    rhs = distribution_poly(stream(), ddes_dmaj)
    product = _product_one_plus(range(1, n)) * carlitz_eulerian(n, max(n, 0))
    subs = [_compare("d_product", {"n": n}, rhs, product), verify_tn(n, caps)]
    return _compare(
        "d", {"n": n}, lhs, rhs,
        counts={"D_n": lhs.total()},
        subchecks=subs,
        witness_fn=_witness([(stream, dstc_len), (stream, ddes_dmaj)]),
    )


@_timed
def verify_d_carlitz(n: int, K: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """sum_r [r+1]_q^n x^r = (dstc, length) distribution / (1-x)(1-x q^n) prod (1 - x^2 q^{2i})."""
    cap = _cap(caps, "signed", n)
    _cap(caps, "series", K)
    dstc_len, ddes_dmaj = _d_pairs()
    lhs = lhs_series_d(n, K)
    den = _d_denominator(n, K)
    num = distribution_poly(enumerate_dn(n, cap), dstc_len)
    classical = _series_check(
        "d_carlitz_ddes", {"n": n, "K": K}, lhs,
        distribution_poly(enumerate_dn(n, cap), ddes_dmaj), den, K, {"D_n": num.total()},
    )
    return _series_check(
        "d_carlitz", {"n": n, "K": K}, lhs, num, den, K, {"D_n": num.total()}, [classical]
    )


@_timed
def verify_lengths(n: int, caps: VerifyCaps | None = None) -> VerificationReport:
    """Pointwise cross-formula checks on B_n and D_n.

    Each side is sum x^{f(s)} q^{g(s)} for two formulas f, g of the same
    quantity, compared with sum x^{f(s)} q^{f(s)}; the polynomials agree
    exactly when f = g everywhere.
    """
    cap = _cap(caps, "signed", n)

    def length_pair(s):
        formula_a = st.inv(s) + s.neg_count + st.nsp(s)
        formula_b = st.inv(s) - sum(v for v in s.window if v < 0)
        return formula_a, formula_b

    def dneg_pair(s):
        d = st.d_stats(s)
        return d["dneg"], s.neg_count + d["epsilon"]

    def decomposition_pair(s):
        alpha, tau = d_decompose(s)
        d = st.d_stats(s)
        lhs = (d["length_D"], d["dstc"])
        rhs = (st.nsp(alpha) + st.inv(tau), st.stc(tau) + alpha.neg_count + st.d_stats(alpha)["epsilon"])
        ok = alpha * tau == s and st.des(alpha) == 0
        return int(lhs == rhs and ok), 1

    def stc_sy_pair(s):
        return st.stc(s), st.stc(sy(s))

    def diagonal(stream, pair):
        pairs = [pair(s) for s in stream]
        both = BivariatePoly(((a, b), 1) for a, b in pairs)
        diag = BivariatePoly(((a, a), 1) for a, _ in pairs)
        return both, diag

    subs = []
    for name, stream_fn, pair in (
        ("length_B_formulas", lambda: enumerate_bn(n, cap), length_pair),
        ("stc_sy", lambda: enumerate_bn(n, cap), stc_sy_pair),
        ("dneg_neg_epsilon", lambda: enumerate_dn(n, cap), dneg_pair),
        ("d_decomposition", lambda: enumerate_dn(n, cap), decomposition_pair),
    ):
        both, diag = diagonal(stream_fn(), pair)
        subs.append(_compare(name, {"n": n}, both, diag, witness_fn=_witness([(stream_fn, pair)])))
    verdict = PASS if all(s.passed for s in subs) else FAIL
    return VerificationReport("lengths", {"n": n}, verdict, subchecks=subs)


@_timed
def verify_real_rooted(rho: Composition, caps: VerifyCaps | None = None) -> VerificationReport:
    """The descent polynomial C_rho(x, 1) has only real, simple, negative roots."""
    cap = _cap(caps, "multiset", rho.N)
    C = distribution_poly(enumerate_multiset(rho, cap), _pair("des", "maj"))
    verdict = sturm_real_rooted(C.at_q(1))
    return VerificationReport(
        "real_rooted", {"rho": list(rho.parts)}, PASS if verdict.ok else FAIL,
        lhs=BivariatePoly.from_x_coeffs(C.at_q(1)),
        counts={"S_rho": C.total()},
        details=verdict.to_json(),
    )


# -- suites


def _compositions_upto(n: int):
    for N in range(1, n + 1):
        yield from compositions(N)


def equal_part_compositions(max_size: int):
    """Every (r, ..., r) with r * m <= max_size."""
    for r in range(1, max_size + 1):
        for m in range(1, max_size // r + 1):
            yield Composition((r,) * m)


def default_suite(caps: VerifyCaps | None = None, K: int = 6):
    """The checks run by ``verify all``, in a fixed order."""
    yield from (verify_ska(n, caps) for n in range(1, 8))
    yield from (verify_fh_all(n, caps) for n in range(1, 7))
    yield from (verify_equi(rho, caps) for rho in _compositions_upto(7))
    yield from (verify_mmpart(rho, K, caps) for rho in _compositions_upto(7))
    yield from (verify_mstc(rho, K, caps) for rho in _compositions_upto(7))
    yield from (verify_factorization(r, caps) for r in (1, 3, 5))
    yield from (conjecture_scan(rho) for rho in equal_part_compositions(10))
    yield from (verify_b(n, caps) for n in range(1, 6))
    yield from (verify_b_carlitz(n, K, caps) for n in range(1, 5))
    yield from (verify_d(n, caps) for n in range(1, 6))
    yield from (verify_d_carlitz(n, K, caps) for n in range(1, 6))
    yield from (verify_lengths(n, caps) for n in range(1, 6))
    yield from (verify_real_rooted(rho, caps) for rho in _compositions_upto(8))


def run_all(caps: VerifyCaps | None = None, K: int = 6) -> list[VerificationReport]:
    return list(default_suite(caps, K))


def suite_ok(reports: Iterable[VerificationReport]) -> bool:
    """True unless a non-informational report failed."""
    return all(r.passed or r.informational for r in reports)


CHECKS = {
    "ska": verify_ska,
    "fh": verify_fh,
    "fh_all": verify_fh_all,
    "equi": verify_equi,
    "mmpart": verify_mmpart,
    "mstc": verify_mstc,
    "factorization": verify_factorization,
    "conjecture": conjecture_scan,
    "b": verify_b,
    "b_carlitz": verify_b_carlitz,
    "tn": verify_tn,
    "d": verify_d,
    "d_carlitz": verify_d_carlitz,
    "lengths": verify_lengths,
    "real_rooted": verify_real_rooted,
}

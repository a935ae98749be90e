import json
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as hs

from eulermahonian import statistics as st
from eulermahonian.errors import DomainError, NonDivisibleError
from eulermahonian.perms import Composition, compositions, enumerate_multiset, enumerate_sn
from eulermahonian.polyalg import (
    BivariatePoly,
    ScanBounds,
    TruncatedSeries,
    carlitz_eulerian,
    count_real_roots,
    cyclotomic,
    distribution_poly,
    divide_unitary_binomial,
    exact_div,
    geometric_factor_inverse,
    lhs_series,
    lhs_series_b,
    multiset_des_maj_poly,
    q_binomial,
    q_factorial,
    q_int,
    series_eq,
    series_mul,
    sturm_real_rooted,
    unitary_candidate,
    unitary_factor_scan,
)

x, q = BivariatePoly.x(), BivariatePoly.q()
one = BivariatePoly.one()

small_polys = hs.dictionaries(
    hs.tuples(hs.integers(0, 3), hs.integers(0, 3)), hs.integers(-5, 5), max_size=6
).map(BivariatePoly)


def test_examples():
    assert (1 + x * q) * (1 - x * q) == 1 - x**2 * q**2
    assert exact_div(1 - x**2 * q**2, 1 + x * q) == 1 - x * q
    with pytest.raises(NonDivisibleError) as info:
        exact_div(1 + x * q, 1 + x * q**2)
    assert info.value.remainder is not None
    with pytest.raises(ZeroDivisionError):
        exact_div(x, BivariatePoly.zero())


def test_canonical_form():
    f = BivariatePoly({(1, 1): 2, (0, 0): 0})
    assert f.terms == {(1, 1): 2}
    assert (x - x).is_zero()
    assert hash(x + q) == hash(q + x)


def test_rendering_and_json():
    f = 1 + 2 * x * q + 2 * x * q**2 + x**2 * q**3
    assert str(f) == "1 + 2*x*q + 2*x*q^2 + x^2*q^3"
    assert str(1 - x) == "1 - x"
    data = f.to_json()
    assert data == {"terms": [["1", 0, 0], ["2", 1, 1], ["2", 1, 2], ["1", 2, 3]]}
    assert BivariatePoly.from_json(json.loads(json.dumps(data))) == f
    big = BivariatePoly.monomial(10**40, 1, 0)
    assert BivariatePoly.from_json(big.to_json()) == big


@settings(max_examples=60)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == BivariatePoly.zero()
    assert a * one == a


@settings(max_examples=60)
@given(small_polys, small_polys)
def test_exact_div_round_trip(a, b):
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a


@given(small_polys, hs.integers(-3, 3), hs.integers(-3, 3))
def test_evaluate_matches_sympy(f, xv, qv):
    X, Q = sympy.symbols("x q")
    expr = sum(c * X**i * Q**j for (i, j), c in f.terms.items())
    assert f.evaluate(xv, qv) == (expr.subs({X: xv, Q: qv}) if f.terms else 0)


def q_binomial_oracle(n, k):
    # Pascal-type recurrence; independent of the factorial quotient
    if k < 0 or k > n:
        return BivariatePoly.zero()
    if k == 0 or k == n:
        return one
    return q_binomial_oracle(n - 1, k - 1) + q**k * q_binomial_oracle(n - 1, k)


def test_q_analogs():
    assert q_int(3) == 1 + q + q**2
    assert q_int(0) == BivariatePoly.zero()
    assert q_factorial(3) == (1 + q) * (1 + q + q**2)
    assert q_binomial(5, 0) == one
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    with pytest.raises(DomainError):
        q_binomial(2, 3)
    assert q_binomial(2, 3, strict=False) == BivariatePoly.zero()


def test_q_binomial_against_recurrence():
    for n in range(0, 11):
        for k in range(0, n + 1):
            b = q_binomial(n, k)
            assert b == q_binomial_oracle(n, k)
            assert b == q_binomial(n, n - k)
            assert b.evaluate(1, 1) == comb(n, k)


def test_q_factorial_is_inv_distribution():
    for n in range(1, 7):
        assert q_factorial(n) == distribution_poly(enumerate_sn(n), (lambda p: 0, "inv"))


def test_distribution_examples():
    assert distribution_poly(enumerate_sn(2), ("des", "maj")) == 1 + x * q
    A3 = 1 + 2 * x * q + 2 * x * q**2 + x**2 * q**3
    assert distribution_poly(enumerate_sn(3), ("des", "maj")) == A3
    assert carlitz_eulerian(1) == one
    assert carlitz_eulerian(2) == 1 + x * q
    assert carlitz_eulerian(3) == A3
    with pytest.raises(DomainError):
        distribution_poly(enumerate_sn(2), ("neg", "maj"))


def test_carlitz_eulerian_both_pairs():
    for n in range(1, 8):
        assert carlitz_eulerian(n) == distribution_poly(enumerate_sn(n), ("stc", "inv"))


def test_multiset_dp_matches_enumeration():
    for N in range(1, 8):
        for rho in compositions(N):
            f = distribution_poly(enumerate_multiset(rho), ("des", "maj"))
            assert multiset_des_maj_poly(rho) == f
            assert f.evaluate(1, 1) == f.total()


def test_series_examples():
    inv = geometric_factor_inverse([(1, 0)], 3)
    assert inv.to_poly() == 1 + x + x**2 + x**3
    inv2 = geometric_factor_inverse([(1, 0), (1, 1)], 4)
    assert inv2.coeff(2) == [1, 1, 1]
    with pytest.raises(DomainError):
        geometric_factor_inverse([(0, 1)], 3)
    # both sides of the rho = (1) multiset identity
    lhs = lhs_series(Composition((1,)), 4)
    rhs = series_mul(TruncatedSeries.from_poly(one, 4), geometric_factor_inverse([(1, 0), (1, 1)], 4))
    assert series_eq(lhs, rhs, 4)


def test_lhs_series_coefficients():
    assert lhs_series(Composition((1,)), 3).coeff(2) == [1, 1, 1]
    assert lhs_series_b(1, 2).coeff(1) == [1, 1]
    qb = q_binomial(3, 1)
    assert lhs_series(Composition((2, 2)), 2).coeff(1) == (qb * qb).rows()[0]


@given(hs.lists(hs.tuples(hs.integers(1, 3), hs.integers(0, 3)), min_size=1, max_size=4))
def test_geometric_inverse_is_inverse(factors):
    K = 6
    inv = geometric_factor_inverse(factors, K)
    prod = one
    for a, b in factors:
        prod = prod * (1 - BivariatePoly.monomial(1, a, b))
    assert series_mul(TruncatedSeries.from_poly(prod, K), inv) == TruncatedSeries.one(K)


def test_series_json_round_trip():
    s = lhs_series(Composition((2, 1)), 5)
    assert TruncatedSeries.from_json(json.loads(json.dumps(s.to_json()))) == s


def test_cyclotomic_against_sympy():
    t = sympy.symbols("t")
    for d in range(1, 25):
        expected = sympy.Poly(sympy.cyclotomic_poly(d, t), t).all_coeffs()[::-1]
        assert cyclotomic(d) == [int(c) for c in expected]


def test_unitary_scan_examples():
    found = unitary_factor_scan(1 + x * q)
    assert [(f.d, f.a, f.b) for f in found] == [(2, 1, 1)]
    found = unitary_factor_scan(1 + x + x**2, ScanBounds(d_max=3))
    assert (3, 1, 0) in {(f.d, f.a, f.b) for f in found}
    C33 = multiset_des_maj_poly(Composition((3, 3)))
    quotient = divide_unitary_binomial(C33, 1, 3)
    assert quotient * (1 + x * q**3) == C33
    with pytest.raises(NonDivisibleError):
        divide_unitary_binomial(C33, 1, 2)
    with pytest.raises(DomainError):
        unitary_factor_scan(BivariatePoly.zero())


def test_unitary_scan_multiplicity():
    f = (1 + x * q**2) ** 2 * (1 + x + x**2)
    found = {(u.d, u.a, u.b): u.multiplicity for u in unitary_factor_scan(f)}
    assert found[(2, 1, 2)] == 2
    assert found[(3, 1, 0)] == 1
    assert unitary_candidate(3, 1, 0) == 1 + x + x**2


def test_sturm_examples():
    assert sturm_real_rooted([1, 4, 1]).verdict == "all real simple negative"
    assert sturm_real_rooted([1, 0, 1]).verdict == "not"
    assert sturm_real_rooted([1, 2, 1]).verdict == "not"
    assert not sturm_real_rooted([0, 1]).ok
    assert not sturm_real_rooted([-1, 1]).ok
    assert sturm_real_rooted([5]).ok
    assert count_real_roots([-1, 0, 1]) == 2


def sturm_oracle(coeffs):
    t = sympy.symbols("t")
    p = sympy.Poly(list(reversed(coeffs)), t)
    roots = sympy.real_roots(p)
    deg = p.degree()
    return len(roots) == deg and len(set(roots)) == deg and all(r < 0 for r in roots)


@settings(max_examples=80, deadline=None)
@given(hs.lists(hs.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_sturm_matches_sympy_random(coeffs):
    assert sturm_real_rooted(coeffs).ok == sturm_oracle(coeffs)


@settings(max_examples=40, deadline=None)
@given(hs.lists(hs.integers(1, 6), min_size=1, max_size=5))
def test_sturm_constructed_roots(roots):
    p = one
    for r in roots:
        p = p * (x + r)
    assert sturm_real_rooted(p).ok == (len(set(roots)) == len(roots))


def test_eulerian_real_rooted():
    for n in range(1, 9):
        assert sturm_real_rooted(carlitz_eulerian(n).at_q(1)).ok

import itertools

import pytest
from hypothesis import given, strategies as hs

from eulermahonian import statistics as st
from eulermahonian.bijections import (
    assemble_b,
    d_compose,
    d_decompose,
    istd,
    m_set,
    min_coset_rep,
    phi,
    signs,
    standardize,
    sy,
)
from eulermahonian.errors import DomainError
from eulermahonian.perms import (
    Composition,
    DescentSubset,
    MultisetWord,
    Permutation,
    SignedPermutation,
    composition_to_R,
    compositions,
    enumerate_bn,
    enumerate_dn,
    enumerate_multiset,
    enumerate_quotient,
    enumerate_sn,
    enumerate_tn,
)
from eulermahonian.polyalg import BivariatePoly


def P(text):
    return Permutation(tuple(int(c) for c in text))


def std_oracle(letters):
    # stable sort of positions by letter gives the standardized labels
    order = sorted(range(len(letters)), key=lambda i: (letters[i], i))
    labels = [0] * len(letters)
    for label, i in enumerate(order, 1):
        labels[i] = label
    return tuple(labels)


def test_standardize_examples():
    w = MultisetWord.from_letters((1, 2, 2, 3, 1, 3, 2))
    assert standardize(w) == P("1346275")
    assert istd(w) == P("1346275").inverse() == P("1523746")
    assert standardize(MultisetWord.from_letters((1, 1))) == P("12")
    assert istd(MultisetWord.from_letters((2, 1))) == P("21")


def test_standardize_properties_exhaustive():
    for N in range(1, 7):
        for rho in compositions(N):
            R = composition_to_R(rho)
            for w in enumerate_multiset(rho):
                p = standardize(w)
                assert p.window == std_oracle(w.letters)
                assert st.descent_set(p) == st.descent_set(w)
                q = istd(w)
                assert set(st.descent_set(q)) <= R.positions
                assert st.inv(q) == st.inv(w)


def test_istd_is_bijection_onto_quotient():
    rho = Composition((2, 3, 2))
    R = composition_to_R(rho)
    images = {istd(w) for w in enumerate_multiset(rho)}
    assert images == set(enumerate_quotient(7, R))


def test_min_coset_rep():
    R = DescentSubset(6, frozenset({3}))
    assert min_coset_rep(P("142536"), R) == P("124356")
    for p in enumerate_sn(5):
        assert min_coset_rep(p, DescentSubset.full(5)) == p
    for R in DescentSubset.full(5).subsets():
        for p in enumerate_sn(5):
            m = min_coset_rep(p, R)
            assert set(st.descent_set(m)) <= R.positions
            assert min_coset_rep(m, R) == m
            for a, b in R.blocks():
                assert set(m.window[a:b]) == set(p.window[a:b])


def test_phi_examples():
    w = P("145236")
    assert m_set(w, 3) == {2}
    assert phi(w, 3) == P("124356")
    assert (st.inv(w), st.inv(phi(w, 3))) == (4, 1)
    assert (st.stc(w), st.stc(phi(w, 3))) == (2, 1)
    assert phi(P("124356"), 3) == w
    assert phi(P("12"), 1) == P("21")


def test_phi_preconditions():
    with pytest.raises(DomainError):
        phi(P("1234"), 2)
    with pytest.raises(DomainError):
        phi(P("213456"), 3)


def m_set_oracle(w, r):
    pos = {v: i + 1 for i, v in enumerate(w.window)}
    return {i for i in range(1, r + 1) if (pos[i] <= r) != (pos[i + r] <= r)}


@pytest.mark.parametrize("r", [1, 3, 5])
def test_phi_involution_exhaustive(r):
    R = DescentSubset(2 * r, frozenset({r}))
    seen = 0
    for w in enumerate_quotient(2 * r, R):
        seen += 1
        assert m_set(w, r) == m_set_oracle(w, r) != set()
        p = phi(w, r)
        assert set(st.descent_set(p)) <= {r}
        assert phi(p, r) == w
        assert abs(st.inv(p) - st.inv(w)) == r
        assert abs(st.stc(p) - st.stc(w)) == 1
    assert seen == len(list(itertools.combinations(range(2 * r), r)))


def test_sy_and_signs():
    s = SignedPermutation((-2, 1))
    assert sy(s) == P("12") and signs(s) == frozenset({-2})
    s = SignedPermutation((3, 1, 2))
    assert sy(s) == P("312") and signs(s) == frozenset()


def test_b_decomposition_is_bijection():
    for n in range(1, 5):
        pairs = set()
        for s in enumerate_bn(n):
            tau, J = sy(s), signs(s)
            assert assemble_b(tau, J) == s
            assert st.stc(s) == st.stc(tau)
            pairs.add((tau, J))
        # S_n x 2^[n]: every pair occurs exactly once
        assert len(pairs) == len(set(t for t, _ in pairs)) * 2**n


def test_assemble_b_rejects_bad_J():
    with pytest.raises(DomainError):
        assemble_b(P("12"), {-3})
    with pytest.raises(DomainError):
        assemble_b(P("12"), {1})


def test_d_decomposition():
    e = SignedPermutation.identity(3)
    alpha, tau = d_decompose(e)
    assert alpha == e and tau == Permutation.identity(3)
    for n in range(1, 6):
        tn = set(enumerate_tn(n))
        for s in enumerate_dn(n):
            alpha, tau = d_decompose(s)
            assert alpha in tn
            assert alpha * tau == s == d_compose(alpha, tau)
            d, da = st.d_stats(s), st.d_stats(alpha)
            assert d["length_D"] == st.nsp(alpha) + st.inv(tau)
            assert st.nsp(s) == st.nsp(alpha)
            assert d["dstc"] == st.stc(tau) + alpha.neg_count + da["epsilon"]
    with pytest.raises(DomainError):
        d_decompose(SignedPermutation((-1, 2)))


def test_t3_generating_function():
    f = BivariatePoly.zero()
    for a in enumerate_tn(3):
        f = f + BivariatePoly.monomial(1, a.neg_count + st.d_stats(a)["epsilon"], st.nsp(a))
    assert f == (1 + BivariatePoly({(1, 1): 1})) * (1 + BivariatePoly({(1, 2): 1}))


@given(hs.permutations(list(range(1, 7))), hs.sets(hs.integers(1, 6)))
def test_assemble_round_trip_random(window, negated):
    tau = Permutation(tuple(window))
    J = {-v for v in negated}
    s = assemble_b(tau, J)
    assert sy(s) == tau and signs(s) == frozenset(J)

from math import gcd

import pytest
from hypothesis import assume, given, strategies as st
from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form

from absorbing.errors import AlgebraError, CapExceeded
from absorbing.finite_module import abelian_group, classify_submodule
from absorbing.integer_module import (brute_refute_int_ideal, brute_refute_int_submodule,
                                      classify_int_ideal, classify_int_submodule,
                                      colon_ideal_int, colon_in_lattice, hnf, lattice,
                                      lattice_intersection, lattice_sum, m_radical_int,
                                      saturation, torsion_exponent, whole_lattice)
from absorbing.suite.corpus import shipped_lattices
from oracles import Tables, in_lattice_2d, z_is_1ap_boxed

# nZ is 1-absorbing primary iff n is 0 or a prime power
ONE_AP_UPTO_40 = [0, 2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37]
vec = st.tuples(st.integers(-9, 9), st.integers(-9, 9))


def test_hnf_examples():
    assert hnf([(2, 4), (0, 6)], 2) == ((2, 4), (0, 6))
    assert hnf([(4, 6), (6, 9)], 2) == ((2, 3),)
    assert hnf([(0, 0)], 2) == ()
    assert lattice([(2, 0), (0, 2), (1, 1)], 2).basis == ((1, 1), (0, 2))


@given(vec, vec, vec)
def test_membership_matches_cramer(b1, b2, v):
    L = lattice([b1, b2], 2)
    assert (v in L) == in_lattice_2d(L.basis, v)
    # the reduced basis spans the same lattice as the generators
    assert b1 in L and b2 in L


@given(vec, vec, vec, vec)
def test_sum_and_intersection(a1, a2, b1, b2):
    N, K = lattice([a1, a2], 2), lattice([b1, b2], 2)
    S, I = lattice_sum(N, K), lattice_intersection(N, K)
    assert N <= S and K <= S and I <= N and I <= K
    for x in range(-6, 7):
        for y in range(-6, 7):
            v = (x, y)
            assert (v in I) == (v in N and v in K)


@given(vec, vec)
def test_saturation_and_colon(a1, a2):
    N = lattice([a1, a2], 2)
    sat = saturation(N)
    assert N <= sat
    e = torsion_exponent(N)
    assert all(tuple(e * x for x in s) in N for s in sat.basis)
    for d in range(1, 7):
        C = colon_in_lattice(N, d)
        assert N <= C
        assert all(tuple(d * x for x in c) in N for c in C.basis)


def test_examples_in_z2():
    N = lattice([(4, 0)], 2)
    rep = classify_int_submodule(N)
    assert rep.colon_ideal.generator == 0
    assert rep.m_radical == lattice([(2, 0)], 2)
    assert not rep.one_absorbing_primary
    assert rep.witnesses["one_absorbing_primary"] == (2, 2, (1, 0))
    assert saturation(N) == lattice([(1, 0)], 2)
    assert colon_ideal_int(lattice([(2, 0), (0, 6)], 2)).generator == 6


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_prime_power_axis(p, n):
    # Z^2/N has both torsion and a free part, so N is never 1AP although (N:M) = 0 is prime
    rep = classify_int_submodule(lattice([(p ** n, 0)], 2))
    assert rep.m_radical == lattice([(p, 0)], 2)
    assert rep.colon_ideal.generator == 0
    assert classify_int_ideal(0).one_absorbing_primary
    assert not rep.one_absorbing_primary and not rep.prime
    w = rep.witnesses["one_absorbing_primary"]
    if p ** n <= 81:
        assert brute_refute_int_submodule(lattice([(p ** n, 0)], 2)) is not None
    a, b, m = w
    N = lattice([(p ** n, 0)], 2)
    assert a not in (1, -1) and b not in (1, -1)
    assert tuple(a * b * x for x in m) in N and m not in rep.m_radical
    if p == 2 and n >= 2:
        assert w == (p, p ** (n - 1), (1, 0))


def test_frozen_one_absorbing_primary_ideals():
    got = [n for n in [0] + list(range(2, 41)) if classify_int_ideal(n).one_absorbing_primary]
    assert got == ONE_AP_UPTO_40


@pytest.mark.parametrize("n", [0] + list(range(2, 41)))
def test_int_ideal_matches_boxed_definition(n):
    expected = z_is_1ap_boxed(n, 40)
    rep = classify_int_ideal(n)
    assert rep.one_absorbing_primary == (expected is None)
    assert brute_refute_int_ideal(n, 40) == expected
    assert rep.prime == (n == 0 or len(factorint(n)) == 1 and sum(factorint(n).values()) == 1)
    assert rep.two_absorbing == (n == 0 or sum(factorint(n).values()) <= 2)
    assert rep.two_absorbing_primary == (n == 0 or len(factorint(n)) <= 2)


def test_int_ideal_rank_one_agrees():
    for n in [0, 2, 6, 8, 12, 30]:
        a = classify_int_ideal(n).flags()
        b = classify_int_submodule(lattice([(n,)], 1)).flags()
        assert {k: a[k] for k in b} == b


def test_caps_and_errors():
    with pytest.raises(CapExceeded):
        lattice([(1, 0, 0, 0, 0)], 5)
    with pytest.raises(CapExceeded):
        lattice([(2 ** 31, 0)], 2)
    with pytest.raises(AlgebraError):
        (1, 2, 3) in lattice([(1, 0)], 2)
    with pytest.raises(AlgebraError):
        classify_int_ideal(1)
    assert not classify_int_submodule(whole_lattice(2)).proper


def invariants(N):
    snf = smith_normal_form(Matrix([list(b) for b in N.basis]), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(2) if abs(int(snf[i, i])) != 1]


@st.composite
def finite_index(draw):
    a, b = draw(vec), draw(vec)
    det = abs(a[0] * b[1] - a[1] * b[0])
    assume(2 <= det <= 36)
    return lattice([a, b], 2)


@given(finite_index())
def test_full_rank_lattice_against_quotient_group(N):
    """N in Z^2 against the zero submodule of the finite group Z^2/N."""
    G = abelian_group(invariants(N))
    T = Tables.of(G)
    subs = T.submodules(max_gens=2)
    zero = G.zero_submodule()
    rep = classify_int_submodule(N)
    assert rep.one_absorbing_primary == T.is_1ap(zero.elements, subs)
    assert rep.two_absorbing_primary == T.is_2ap(zero.elements, subs)
    assert rep.prime == T.is_prime(zero.elements)
    assert rep.colon_ideal.generator == max(invariants(N))
    # indices agree: |Z^2 / M-rad(N)| = |G / M-rad(0)|
    mrad = rep.m_radical
    index = abs(Matrix([list(b) for b in mrad.basis]).det())
    assert index * len(T.m_radical(zero.elements, subs)) == G.size
    # and the finite-module classifier agrees on the quotient
    finite = classify_submodule(zero).flags()
    assert all(finite[k] == v for k, v in rep.flags().items())


@pytest.mark.parametrize("L", [L for L in shipped_lattices(24, 0) if L.is_proper()][:16],
                         ids=repr)
def test_gcd_class_reduction_against_direct_scan(L):
    rep = classify_int_submodule(L)
    direct = brute_refute_int_submodule(L)
    assert (direct is None) == rep.one_absorbing_primary
    assert m_radical_int(L) == m_radical_int(L, prime_bound=60)
    e = torsion_exponent(L)
    for d in range(1, 2 * e + 3):
        assert colon_in_lattice(L, d) == colon_in_lattice(L, gcd(d, e))

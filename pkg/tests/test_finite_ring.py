import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import divisor_count, factorint

from absorbing.errors import AlgebraError, CapExceeded
from absorbing.finite_ring import (build_ring, classify_ideal, ideal_combine, ideal_span,
                                   integer_scalars, multiplicative_closure, product, quotient,
                                   radical, residue)
from oracles import zn_ideals, zn_is_1ap, zn_is_prime, zn_radical, zn_units

# dZ/n is 1-absorbing primary iff d is a prime-power divisor of n, so the count is Omega(n)
ONE_AP_IDEAL_COUNT = {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 3, 9: 2, 10: 2, 11: 1, 12: 3,
                      13: 1, 14: 2, 15: 2, 16: 4, 17: 1, 18: 3, 19: 1, 20: 3, 21: 2, 22: 2,
                      23: 1, 24: 4, 25: 2, 26: 2, 27: 3, 28: 3, 29: 1, 30: 3}
ZERO_IS_1AP = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def ideal(R, g):
    return ideal_span(R, [R.element(g)])


def test_units_of_z12():
    assert sorted(residue(12).units) == [1, 5, 7, 11]


@pytest.mark.parametrize("n", range(2, 41))
def test_units_and_ideals_match_oracle(n):
    R = residue(n)
    assert sorted(R.units) == zn_units(n)
    got = [I.elements for I in R.ideals()]
    assert got == zn_ideals(n)
    assert len(got) == divisor_count(n)


@pytest.mark.parametrize("n", range(2, 41))
def test_classification_matches_oracle(n):
    R = residue(n)
    for I in R.ideals():
        rep = classify_ideal(I)
        assert rep.one_absorbing_primary == zn_is_1ap(n, I.elements)
        assert rep.prime == zn_is_prime(n, I.elements)
        assert rep.radical.elements == zn_radical(n, I.elements)


def test_frozen_one_absorbing_primary_counts():
    got = {n: sum(classify_ideal(I).one_absorbing_primary for I in residue(n).ideals())
           for n in range(2, 31)}
    assert got == ONE_AP_IDEAL_COUNT
    assert got == {n: sum(factorint(n).values()) for n in range(2, 31)}


def test_frozen_zero_ideal():
    got = [n for n in range(2, 31) if classify_ideal(residue(n).zero_ideal()).one_absorbing_primary]
    assert got == ZERO_IS_1AP


def test_z12_examples():
    R = residue(12)
    assert len(R.ideals()) == 6
    assert ideal_combine(ideal(R, 4), ideal(R, 2), "colon") == ideal(R, 2)
    assert radical(R.zero_ideal()) == ideal(R, 6)
    assert radical(ideal(R, 4)) == ideal(R, 2)
    zero = classify_ideal(R.zero_ideal())
    assert not zero.one_absorbing_primary
    assert zero.witnesses["one_absorbing_primary"] == (2, 2, 3)
    assert zero.two_absorbing_primary
    four = classify_ideal(ideal(R, 4))
    assert four.one_absorbing_primary and four.primary and not four.prime
    assert classify_ideal(ideal(R, 2)).prime
    assert classify_ideal(ideal(R, 2)).maximal


def test_improper_ideal_has_no_flags():
    rep = classify_ideal(residue(12).whole())
    assert not rep.proper and not rep.one_absorbing_primary


def test_constructors():
    assert product(residue(2), residue(3)).size == 6
    R = residue(12)
    Q = quotient(R, ideal(R, 4))
    assert Q.size == 4
    assert build_ring(Q.descriptor).size == 4
    assert integer_scalars(6).units == frozenset()
    with pytest.raises(AlgebraError):
        residue(1)
    with pytest.raises(AlgebraError):
        quotient(R, R.whole())
    with pytest.raises(CapExceeded):
        residue(257)
    with pytest.raises(CapExceeded):
        product(residue(20), residue(20))


def test_element_labels():
    P = product(residue(2), residue(3))
    x = P.element((1, 2))
    assert P.label(x) == (1, 2)
    with pytest.raises(AlgebraError):
        residue(12).element("nope")


def test_integer_lift_treats_every_ideal_as_proper():
    R = integer_scalars(12)
    assert len(R.proper_ideals()) == len(R.ideals())


def test_multiplicative_closure():
    R = residue(12)
    assert multiplicative_closure(R, [3]) == frozenset({1, 3, 9})


@st.composite
def ring_and_two_ideals(draw):
    n = draw(st.integers(2, 48))
    R = residue(n)
    ideals = R.ideals()
    return R, draw(st.sampled_from(ideals)), draw(st.sampled_from(ideals))


@given(ring_and_two_ideals())
def test_ideal_lattice_laws(args):
    R, I, J = args
    s = ideal_combine(I, J, "sum")
    m = ideal_combine(I, J, "intersection")
    p = ideal_combine(I, J, "product")
    c = ideal_combine(I, J, "colon")
    assert m <= I <= s and m <= J <= s
    assert p <= m
    assert ideal_combine(c, J, "product") <= I
    assert I <= radical(I)
    assert radical(radical(I)) == radical(I)
    assert radical(m) == ideal_combine(radical(I), radical(J), "intersection")


@given(st.integers(2, 60))
def test_ring_axioms_hold(n):
    R = residue(n)
    a = np.arange(n)
    assert np.array_equal(R.mul, R.mul.T)
    assert np.array_equal(R.mul[R.one], a)

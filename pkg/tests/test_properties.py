"""Randomized checks of structural facts across small modules."""

from hypothesis import given, strategies as st

from absorbing.cli import dumps
from absorbing.finite_module import (classify_submodule, colon_into_ring, m_radical,
                                     product_module, regular, submodule_meet)
from absorbing.finite_ring import radical, residue
from absorbing.spec import parse_spec, spec_for_submodule

moduli = st.integers(2, 12)


@st.composite
def product_submodule(draw):
    M = product_module(regular(residue(draw(moduli))), regular(residue(draw(moduli))))
    return draw(st.sampled_from(M.submodules()))


@given(product_submodule())
def test_flag_chain(N):
    rep = classify_submodule(N)
    if rep.prime:
        assert rep.one_absorbing_primary
    if rep.one_absorbing_primary:
        assert rep.two_absorbing_primary
    if rep.prime:
        assert rep.two_absorbing


@given(product_submodule())
def test_radicals_nest(N):
    rad = m_radical(N)
    assert N <= rad
    # N inside M-rad(N) puts (N:M) inside (M-rad(N):M)
    assert radical(colon_into_ring(N, N.module)) <= radical(colon_into_ring(rad, N.module))


@given(product_submodule(), st.data())
def test_meet_of_radicals_contains_radical_of_meet(N, data):
    K = data.draw(st.sampled_from(N.module.submodules()))
    assert m_radical(submodule_meet(N, K)) <= submodule_meet(m_radical(N), m_radical(K))


@given(product_submodule())
def test_spec_round_trip_and_stable_report(N):
    text = spec_for_submodule(N)
    back = parse_spec(text).target("N").value
    assert dumps(classify_submodule(back).to_json()) == dumps(classify_submodule(N).to_json())
    assert spec_for_submodule(back) == text

import pytest
from hypothesis import given, strategies as st

from absorbing.errors import AlgebraError, MismatchError, NotMultiplicationError
from absorbing.finite_module import (abelian_group, annihilator, classify_submodule,
                                     colon_in_module, colon_into_ring, free,
                                     hom_from_generators, homogeneous_ideal, idealize,
                                     is_faithful, is_multiplication, localize, m_radical,
                                     product_module, quotient_module, regular, scalar_map, span,
                                     submodule_meet, submodule_product, submodule_sum)
from absorbing.finite_ring import ideal_span, residue
from oracles import Tables


def sub(M, *labels):
    return span(M, [M.element(x) for x in labels])


def oracle_modules():
    F2 = residue(2)
    A = idealize(F2, free(F2, 2))
    Z12 = regular(residue(12))
    out = [regular(residue(n)) for n in range(2, 17)]
    out += [free(F2, 2), free(residue(3), 2), abelian_group([2, 4]), abelian_group([2, 2]),
            product_module(regular(residue(2)), regular(residue(3))),
            product_module(regular(residue(4)), regular(residue(2))),
            quotient_module(Z12, sub(Z12, 4))[0], regular(A)]
    return out


@pytest.mark.parametrize("M", oracle_modules(), ids=lambda M: str(M.descriptor)[:60])
def test_module_matches_oracle(M):
    T = Tables.of(M)
    subs = T.submodules()
    assert {N.elements for N in M.submodules()} == subs
    assert is_multiplication(M) == T.is_multiplication(subs)
    for N in M.submodules():
        rep = classify_submodule(N)
        assert m_radical(N).elements == T.m_radical(N.elements, subs)
        assert rep.prime == T.is_prime(N.elements)
        assert rep.one_absorbing_primary == T.is_1ap(N.elements, subs)
        assert rep.two_absorbing_primary == T.is_2ap(N.elements, subs)
        assert colon_into_ring(N, M).elements == T.colon(N.elements, range(M.size))


def test_regular_z12_values():
    M = regular(residue(12))
    assert len(M.submodules()) == 6
    four = sub(M, 4)
    assert colon_into_ring(four, M) == ideal_span(M.ring, [4])
    assert colon_in_module(four, 6) == sub(M, 2)
    assert m_radical(four) == sub(M, 2)
    assert m_radical(M.zero_submodule()) == sub(M, 6)
    assert colon_into_ring(sub(M, 6), 3) == ideal_span(M.ring, [2])
    rep = classify_submodule(M.zero_submodule())
    assert rep.witnesses["one_absorbing_primary"] == (2, 2, 3)
    assert submodule_product(four, sub(M, 3)) == M.zero_submodule()


def test_klein_four():
    V = free(residue(2), 2)
    assert len(V.submodules()) == 5
    assert not is_multiplication(V)
    lines = [N for N in V.submodules() if len(N) == 2]
    assert len(lines) == 3
    assert all(classify_submodule(L).one_absorbing_primary for L in lines)
    with pytest.raises(NotMultiplicationError):
        submodule_product(lines[0], lines[1])


def test_groups_and_products():
    G = abelian_group([2, 4])
    assert len(G.submodules()) == 8
    assert not is_faithful(G)
    P = product_module(regular(residue(2)), regular(residue(3)))
    assert P.size == 6 and len(P.submodules()) == 4
    assert is_faithful(P) and is_multiplication(P)


def test_quotient_projection():
    M = regular(residue(12))
    N = sub(M, 4)
    Q, pi = quotient_module(M, N)
    assert Q.size == 4
    assert pi.kernel() == N
    assert pi.is_surjective()
    assert pi.image(sub(M, 2)) == sub(Q, 2)


def test_submodule_operations():
    M = regular(residue(12))
    a, b = sub(M, 4), sub(M, 6)
    assert submodule_sum(a, b) == sub(M, 2)
    assert submodule_meet(a, b) == M.zero_submodule()
    with pytest.raises(MismatchError):
        submodule_sum(a, sub(regular(residue(12)), 4))


def test_annihilator_and_faithful():
    Z12 = regular(residue(12))
    M = quotient_module(Z12, sub(Z12, 4))[0]
    assert not is_faithful(M)
    assert annihilator(M) == ideal_span(M.ring, [4])


def test_homomorphisms():
    M = regular(residue(12))
    f = scalar_map(M, 2)
    assert f.image() == sub(M, 2)
    Q, _ = quotient_module(M, sub(M, 3))
    g = hom_from_generators(M, Q, [Q.element(1)])
    assert g.kernel() == sub(M, 3)
    with pytest.raises(AlgebraError):
        hom_from_generators(Q, M, [M.element(1)])   # 3 * 1 would have to vanish


def test_localization():
    M = regular(residue(12))
    loc = localize(M, [1, 3, 9])
    assert loc.module.size == 4
    assert localize(M, sorted(M.ring.units)).module.size == 12
    with pytest.raises(AlgebraError):
        localize(M, [1, 3])              # not multiplicatively closed
    with pytest.raises(AlgebraError):
        localize(M, [0, 1])              # zero ring
    with pytest.raises(AlgebraError):
        localize(abelian_group([4]), [1])


def test_idealization():
    R = residue(2)
    with pytest.raises(MismatchError):
        idealize(residue(2), regular(residue(2)))
    V = free(R, 2)
    A = idealize(R, V)
    assert A.size == 8
    assert len(A.ideals()) == 6
    # R(+)V is local with square-zero maximal ideal 0(+)V
    with pytest.raises(AlgebraError):
        homogeneous_ideal(A, R.whole(), V.zero_submodule())
    H = homogeneous_ideal(A, R.zero_ideal(), V.whole())
    assert len(H) == 4


@given(st.integers(2, 40), st.data())
def test_m_radical_contains_and_is_idempotent(n, data):
    M = regular(residue(n))
    N = data.draw(st.sampled_from(M.submodules()))
    R = m_radical(N)
    assert N <= R
    assert m_radical(R) == R

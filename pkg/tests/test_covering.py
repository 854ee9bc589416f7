from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from absorbing.errors import AlgebraError, MismatchError, NotMultiplicationError
from absorbing.finite_module import free, idealize, regular, span
from absorbing.finite_ring import residue
from absorbing.suite import (Covering, avoidance_check, efficient_check, enumerate_coverings,
                             is_efficient, reduce_to_efficient)


def klein():
    V = free(residue(2), 2)
    lines = [N for N in V.submodules() if len(N) == 2]
    return V, lines


def test_klein_four_three_lines():
    V, lines = klein()
    C = Covering(V.whole(), lines)
    assert C.covers() and is_efficient(C)
    assert reduce_to_efficient(C).members == C.members
    with pytest.raises(NotMultiplicationError):
        avoidance_check(C)
    with pytest.raises(NotMultiplicationError):
        efficient_check(C)
    # outside multiplication modules the conclusion can fail; the hypothesis screens it out
    v = avoidance_check(C, strict=False)
    assert not v.conclusion_holds and not v.hypothesis_holds


def test_duplicates_and_redundant_members_are_dropped():
    V, lines = klein()
    C = Covering(V.whole(), lines + [lines[0]])
    assert not is_efficient(C)
    R = reduce_to_efficient(C)
    assert R.n == 3 and is_efficient(R)


def test_two_member_coverings_are_never_efficient():
    # a group is never a union of two proper subgroups
    for M in [regular(residue(12)), regular(residue(36)), free(residue(2), 2),
              free(residue(3), 2)]:
        proper = [N for N in M.submodules() if N.is_proper]
        for N in M.submodules():
            for a, b in combinations(proper, 2):
                C = Covering(N, (a, b))
                if C.covers():
                    assert not is_efficient(C)


def test_covering_validation():
    M = regular(residue(12))
    with pytest.raises(AlgebraError):
        Covering(M.whole(), ())
    with pytest.raises(AlgebraError):
        Covering(span(M, [2]), (M.whole(),))
    other = regular(residue(12))
    with pytest.raises(MismatchError):
        Covering(M.whole(), (span(other, [2]),))
    with pytest.raises(AlgebraError):
        is_efficient(Covering(M.whole(), (span(M, [2]), span(M, [3]))))


def test_avoidance_in_a_multiplication_module():
    M = regular(residue(12))
    C = Covering(span(M, [4]), (span(M, [2]), span(M, [3])))
    v = avoidance_check(C)
    assert v.conclusion_holds
    if v.hypothesis_holds:
        assert v.witness["contained_in"] == 0


def test_enumerated_coverings_cover():
    M = regular(residue(30))
    cov = list(enumerate_coverings(M, 3))
    assert cov
    assert all(C.covers() for C in cov)


F2 = residue(2)
A = regular(idealize(F2, free(F2, 2)))
MODULES = [regular(residue(36)), A, free(residue(3), 2)]


@st.composite
def coverings(draw):
    M = draw(st.sampled_from(MODULES))
    subs = M.submodules()
    proper = [N for N in subs if N.is_proper]
    target = draw(st.sampled_from(subs))
    members = draw(st.lists(st.sampled_from(proper), min_size=1, max_size=5))
    extra = [N for N in proper if target.elements & N.elements]
    return Covering(target, tuple(members) + tuple(extra))


@given(coverings())
def test_reduction_is_efficient_and_keeps_the_cover(C):
    if not C.covers():
        return
    R = reduce_to_efficient(C)
    assert R.covers() and is_efficient(R)
    assert all(any(N is K for K in C.members) for N in R.members)

"""The law catalog: each result encoded as hypothesis => conclusion over one instance kind.

A law's ``evaluate`` maps one instance payload to ``(held, violations,
split)``: how many times the hypothesis held inside the instance (a module
can host many submodule-level checks), the violation witnesses as JSON-ready
dicts, and optional per-subclass counters merged into the report.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from ..finite_module import (FiniteModule, Submodule, classify_submodule, colon_in_module,
                             colon_into_ring, homogeneous_ideal, ideal_times, is_faithful,
                             is_multiplication, is_prime_submodule, m_radical,
                             quotient_module, submodule_meet)
from ..finite_ring import (Ideal, classify_ideal, ideal_combine, is_prime_ideal,
                           radical)
from ..integer_module import (IntIdeal, brute_refute_int_ideal, brute_refute_int_submodule,
                              classify_int_ideal, classify_int_submodule, lattice,
                              lattice_intersection, m_radical_int, torsion_exponent)
from .covering import (Covering, avoidance_check, efficient_check, is_efficient,
                       reduce_to_efficient, ring_radical_condition_witness)


@dataclass(frozen=True)
class Law:
    id: str
    reference: str
    instance_kind: str
    hypothesis: str
    conclusion: str
    evaluate: Callable


# shared helpers ------------------------------------------------------------------

def ideal_report(I: Ideal):
    cache = I.ring.__dict__.setdefault("_suite_ideal_reports", {})
    if I.elements not in cache:
        cache[I.elements] = classify_ideal(I)
    return cache[I.elements]


def _one_ap(N: Submodule) -> bool:
    return classify_submodule(N).one_absorbing_primary


def _labels(X) -> list:
    return X.generator_labels()


def _wit(**kw) -> dict:
    return kw


def _mult(M: FiniteModule) -> bool:
    return is_multiplication(M)


def _faithful_mult(M: FiniteModule) -> bool:
    return is_faithful(M) and is_multiplication(M)


def _colon(N: Submodule) -> Ideal:
    return colon_into_ring(N, N.module)


# implication chains ----------------------------------------------------------------

def _chain(N: Submodule):
    if not N.is_proper:
        return 0, [], None
    r = classify_submodule(N)
    bad = []
    for name, lhs, rhs in (("prime=>1ap", r.prime, r.one_absorbing_primary),
                           ("1ap=>2ap-primary", r.one_absorbing_primary, r.two_absorbing_primary),
                           ("prime=>primary", r.prime, r.primary),
                           ("2-absorbing=>2ap-primary", r.two_absorbing, r.two_absorbing_primary)):
        if lhs and not rhs:
            bad.append(_wit(step=name, submodule=_labels(N)))
    held = int(r.prime or r.one_absorbing_primary or r.two_absorbing)
    return held, bad, None


def _chain_ideal(I: Ideal):
    if not I.is_proper:
        return 0, [], None
    r = ideal_report(I)
    bad = []
    for name, lhs, rhs in (("maximal=>prime", r.maximal, r.prime),
                           ("prime=>primary", r.prime, r.primary),
                           ("primary=>1ap", r.primary, r.one_absorbing_primary),
                           ("1ap=>2ap-primary", r.one_absorbing_primary, r.two_absorbing_primary)):
        if lhs and not rhs:
            bad.append(_wit(step=name, ideal=_labels(I)))
    return int(r.prime or r.primary or r.one_absorbing_primary), bad, None


# four characterisations ---------------------------------------------------------------

def four_clauses(N: Submodule) -> tuple[bool, bool, bool, bool]:
    """The four equivalent forms of the 1-absorbing primary condition, each by enumeration.

    (1) the definition; (2) (N :_M ab) inside M-rad(N) whenever ab is outside
    (N:M); (3) abK inside N forces ab in (N:M) or K inside M-rad(N); (4) the
    same with proper ideals I1, I2 in place of a, b.
    """
    M = N.module
    R = M.ring
    colon = _colon(N)
    mrad = m_radical(N)
    nu = R.nonunits
    c1 = classify_submodule(N).one_absorbing_primary
    products = np.unique(R.mul[np.ix_(nu, nu)])
    outside = [int(d) for d in products if d not in colon]
    c2 = all(colon_in_module(N, d) <= mrad for d in outside)
    subs = M.submodules()
    c3 = True
    for d in outside:
        for K in subs:
            if N.mask[M.act[d, K.array]].all() and not K <= mrad:
                c3 = False
                break
        if not c3:
            break
    c4 = True
    ideals = R.proper_ideals()
    seen = set()
    for I1 in ideals:
        for I2 in ideals:
            J = ideal_combine(I1, I2, "product")
            if J.elements in seen:
                continue
            seen.add(J.elements)
            if J <= colon:
                continue
            for K in subs:
                if ideal_times(J, K) <= N and not K <= mrad:
                    c4 = False
                    break
            if not c4:
                break
        if not c4:
            break
    return c1, c2, c3, c4


def _l1(N: Submodule):
    if not N.is_proper:
        return 0, [], None
    cs = four_clauses(N)
    if len(set(cs)) > 1:
        return 1, [_wit(submodule=_labels(N), clauses=list(cs))], None
    return 1, [], None


# multiplication-module laws ------------------------------------------------------------

def _tn(M: FiniteModule):
    """1AP iff N1N2N3 inside N forces N1N2 inside N or N3 inside M-rad(N)."""
    if not _mult(M):
        return 0, [], None
    subs = M.submodules()
    colons = [_colon(K) for K in subs]
    pair = {}
    for i, j in combinations(range(len(subs)), 2):
        pair[i, j] = ideal_combine(colons[i], colons[j], "product")
    for i in range(len(subs)):
        pair[i, i] = ideal_combine(colons[i], colons[i], "product")

    def pr(i, j):
        return pair[min(i, j), max(i, j)]

    prod2 = {key: ideal_times(J, M) for key, J in pair.items()}
    prod3 = {}
    held, bad = 0, []
    for N in subs:
        if not N.is_proper:
            continue
        held += 1
        mrad = m_radical(N)
        ok = True
        for i in range(len(subs)):
            for j in range(i, len(subs)):
                if prod2[i, j] <= N:
                    continue
                for k in range(len(subs)):
                    if subs[k] <= mrad:
                        continue
                    key = (i, j, k)
                    if key not in prod3:
                        prod3[key] = ideal_times(ideal_combine(pr(i, j), colons[k], "product"), M)
                    if prod3[key] <= N:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok != _one_ap(N):
            bad.append(_wit(submodule=_labels(N), one_absorbing_primary=_one_ap(N),
                            product_form=ok))
    return held, bad, None


def _lem9(M: FiniteModule):
    if not _faithful_mult(M):
        return 0, [], None
    bad = []
    ideals = M.ring.ideals()
    for I in ideals:
        if _colon(ideal_times(I, M)) != I:
            bad.append(_wit(ideal=_labels(I)))
    return len(ideals), bad, None


def _t0a(M: FiniteModule):
    if not _faithful_mult(M):
        return 0, [], None
    bad = []
    ideals = M.ring.ideals()
    for I in ideals:
        lhs = ideal_report(I).one_absorbing_primary
        rhs = _one_ap(ideal_times(I, M))
        if lhs != rhs:
            bad.append(_wit(ideal=_labels(I), ideal_1ap=lhs, submodule_1ap=rhs))
    return len(ideals), bad, None


def _t0b(N: Submodule):
    M = N.module
    if not _faithful_mult(M):
        return 0, [], None
    lhs = _one_ap(N)
    rhs = ideal_report(_colon(N)).one_absorbing_primary
    return 1, ([] if lhs == rhs else [_wit(submodule=_labels(N), submodule_1ap=lhs,
                                           colon_1ap=rhs)]), None


def _t0c(N: Submodule):
    M = N.module
    if not _faithful_mult(M):
        return 0, [], None
    lhs = _one_ap(N)
    rhs = any(ideal_report(I).one_absorbing_primary and ideal_times(I, M) == N
              for I in M.ring.ideals())
    return 1, ([] if lhs == rhs else [_wit(submodule=_labels(N), submodule_1ap=lhs,
                                           from_1ap_ideal=rhs)]), None


def _t1(clause: str):
    def evaluate(N: Submodule):
        M = N.module
        if not _mult(M) or not N.is_proper or not _one_ap(N):
            return 0, [], None
        sub = "faithful" if is_faithful(M) else "non_faithful"
        r = classify_submodule(N)
        bad = []
        if clause == "a":
            if not is_prime_ideal(r.colon_radical):
                bad.append(_wit(submodule=_labels(N), colon_radical=_labels(r.colon_radical)))
        elif clause == "b":
            for m in range(M.size):
                if m in r.m_radical:
                    continue
                rm = radical(colon_into_ring(N, m))
                if not is_prime_ideal(rm) or not r.colon_radical <= rm:
                    bad.append(_wit(submodule=_labels(N), m=M.label(m), radical=_labels(rm)))
                    break
        else:
            if not is_prime_submodule(r.m_radical):
                bad.append(_wit(submodule=_labels(N), m_radical=_labels(r.m_radical)))
        split = Counter({f"{sub}_checked": 1, f"{sub}_violations": len(bad)})
        return 1, bad, split
    return evaluate


def _int(M: FiniteModule):
    """Intersections of P-1AP families stay P-1AP, on every pair and every whole family."""
    if not _mult(M):
        return 0, [], None
    fams: dict = {}
    for N in M.submodules():
        r = classify_submodule(N)
        if r.p_one_absorbing_primary_for is not None:
            fams.setdefault(r.p_one_absorbing_primary_for.elements, []).append(N)
    held, bad = 0, []
    for P, fam in fams.items():
        if len(fam) < 2:
            continue
        groups = [tuple(fam)] + [g for g in combinations(fam, 2) if len(fam) > 2]
        for g in groups:
            held += 1
            X = submodule_meet(*g)
            r = classify_submodule(X)
            P_x = r.p_one_absorbing_primary_for
            if P_x is None or P_x.elements != P:
                bad.append(_wit(family=[_labels(N) for N in g], meet=_labels(X)))
    return held, bad, None


def _mrad_mult(N: Submodule):
    """M-rad(N) = sqrt((N:M))M for proper N in a multiplication module."""
    M = N.module
    if not _mult(M) or not N.is_proper:
        return 0, [], None
    lhs = m_radical(N)
    rhs = ideal_times(radical(_colon(N)), M)
    return 1, ([] if lhs == rhs else [_wit(submodule=_labels(N), m_radical=_labels(lhs),
                                           radical_times_m=_labels(rhs))]), None


# homomorphisms -----------------------------------------------------------------------------

def _rad_hom(f):
    if not f.is_surjective():
        return 0, [], None
    M1, M2 = f.source, f.target
    ker = f.kernel()
    held, bad = 0, []
    for N in M1.submodules():
        if not ker <= N:
            continue
        held += 1
        if f.image(m_radical(N)) != m_radical(f.image(N)):
            bad.append(_wit(clause="image", submodule=_labels(N)))
    for K in M2.submodules():
        held += 1
        if f.preimage(m_radical(K)) != m_radical(f.preimage(K)):
            bad.append(_wit(clause="preimage", submodule=_labels(K)))
    return held, bad, None


def _f1(f):
    """Preimages of 1AP submodules, split by whether f is onto."""
    sub = "epimorphism" if f.is_surjective() else "non_epimorphism"
    held, bad = 0, []
    for N2 in f.target.submodules():
        if not N2.is_proper or not _one_ap(N2):
            continue
        X = f.preimage(N2)
        if not X.is_proper:
            continue
        held += 1
        if not _one_ap(X):
            bad.append(_wit(target_submodule=_labels(N2), preimage=_labels(X), map=sub))
    return held, bad, Counter({f"{sub}_checked": held, f"{sub}_violations": len(bad)})


def _f2(f):
    if not f.is_surjective():
        return 0, [], None
    ker = f.kernel()
    held, bad = 0, []
    for N1 in f.source.submodules():
        if not ker <= N1 or not N1.is_proper or not _one_ap(N1):
            continue
        held += 1
        if not _one_ap(f.image(N1)):
            bad.append(_wit(submodule=_labels(N1), image=_labels(f.image(N1))))
    return held, bad, None


# constructions -----------------------------------------------------------------------------

def _quotient_cache(M: FiniteModule, N2: Submodule):
    cache = M.__dict__.setdefault("_suite_quotients", {})
    if N2.elements not in cache:
        cache[N2.elements] = quotient_module(M, N2)
    return cache[N2.elements]


def _cq(payload):
    M, N1, N2 = payload
    Q, pi = _quotient_cache(M, N2)
    lhs = _one_ap(N1)
    rhs = _one_ap(pi.image(N1))
    held = int(lhs or rhs)
    if lhs != rhs:
        return held, [_wit(n1=_labels(N1), n2=_labels(N2), in_m=lhs, in_quotient=rhs)], None
    return held, [], None


def _product_parts(P: FiniteModule):
    M1, M2 = P.parts
    return M1, M2


def _product_sub(P, N1, N2):
    n2 = N2.module.size
    elems = [a * n2 + b for a in N1.elements for b in N2.elements]
    return P.submodule_from_elements(elems)


def _tc(P: FiniteModule):
    M1, M2 = _product_parts(P)
    held, bad = 0, []
    for N1 in M1.submodules():
        if not N1.is_proper:
            continue
        N = _product_sub(P, N1, M2.whole())
        if not _one_ap(N):
            continue
        held += 1
        if not _one_ap(N1):
            bad.append(_wit(n1=_labels(N1)))
    return held, bad, None


def _mrad_prod(P: FiniteModule):
    M1, M2 = _product_parts(P)
    held, bad = 0, []
    for N1 in M1.submodules():
        for N2 in M2.submodules():
            held += 1
            lhs = m_radical(_product_sub(P, N1, N2))
            rhs = _product_sub(P, m_radical(N1), m_radical(N2))
            if lhs != rhs:
                bad.append(_wit(n1=_labels(N1), n2=_labels(N2)))
    return held, bad, None


def _s(loc):
    M, L = loc.base, loc.module
    whole = L.whole()
    held, bad = 0, []
    for N in M.submodules():
        if not N.is_proper or not _one_ap(N):
            continue
        SN = loc.of_submodule(N)
        if SN == whole:
            continue
        held += 1
        if not _one_ap(SN):
            bad.append(_wit(submodule=_labels(N), localized=_labels(SN)))
    return held, bad, None


def _s_map(loc):
    """The canonical maps are linear and send S to units."""
    R, M = loc.base.ring, loc.base
    rl, ml = loc.ring, loc.module
    f, g = loc.ring_map, loc.module_map
    bad = []
    if not np.array_equal(f[R.add], rl.add[f[:, None], f[None, :]]) or \
            not np.array_equal(f[R.mul], rl.mul[f[:, None], f[None, :]]):
        bad.append(_wit(clause="ring map"))
    if not np.array_equal(g[M.add], ml.add[g[:, None], g[None, :]]) or \
            not np.array_equal(g[M.act], ml.act[f[:, None], g[None, :]]):
        bad.append(_wit(clause="module map"))
    for s in sorted(loc.S):
        if int(f[s]) not in rl.units:
            bad.append(_wit(clause="unit", s=R.label(s)))
    return 1, bad, None


def _homogeneous(payload):
    R, M, RM = payload
    for I in R.ideals():
        IM = ideal_times(I, M)
        for N in M.submodules():
            if IM <= N:
                yield I, N, homogeneous_ideal(RM, I, N)


def _id(payload):
    held, bad = 0, []
    for I, N, H in _homogeneous(payload):
        if not H.is_proper or not ideal_report(H).one_absorbing_primary:
            continue
        held += 1
        if not ideal_report(I).one_absorbing_primary:
            bad.append(_wit(ideal=_labels(I), submodule=_labels(N)))
    return held, bad, None


def _id_rad(payload):
    """sqrt(I(+)N) = sqrt(I)(+)M."""
    R, M, RM = payload
    held, bad = 0, []
    for I, N, H in _homogeneous(payload):
        held += 1
        rI = radical(I)
        expect = RM.ideal_from_elements([a * M.size + m for a in rI.elements
                                         for m in range(M.size)])
        if radical(H) != expect:
            bad.append(_wit(ideal=_labels(I), submodule=_labels(N)))
    return held, bad, None


# Z-world --------------------------------------------------------------------------------

def _neg(_payload):
    bad = []
    two, three = classify_int_ideal(2), classify_int_ideal(3)
    six = classify_int_ideal(6)
    if not (two.one_absorbing_primary and three.one_absorbing_primary):
        bad.append(_wit(claim="2Z and 3Z are 1-absorbing primary"))
    meet = lattice_intersection(lattice([(2,)], 1), lattice([(3,)], 1))
    if meet != lattice([(6,)], 1):
        bad.append(_wit(claim="2Z meet 3Z is 6Z"))
    if six.one_absorbing_primary or six.witnesses["one_absorbing_primary"] != (2, 2, 3):
        bad.append(_wit(claim="6Z fails with (2, 2, 3)"))
    return 1, bad, None


def _int_closed(n: int):
    """Closed-form flag for nZ against bounded definitional search (|a|,|b|,|c| <= 64).

    A positive flag must survive the search; a negative flag must come with a
    witness that satisfies the definition, and whenever that witness fits in
    the box the search has to find a refutation too.
    """
    r = classify_int_ideal(n)
    brute = brute_refute_int_ideal(n, 64)
    if r.one_absorbing_primary:
        ok = brute is None
    else:
        a, b, c = r.witnesses["one_absorbing_primary"]
        I, rad = IntIdeal(n), r.radical
        ok = (min(a, b, c) != 1 and (a * b * c) in I and (a * b) not in I and c not in rad)
        if max(a, b, c) <= 64:
            ok = ok and brute is not None
    if ok:
        return 1, [], None
    return 1, [_wit(n=n, closed_form=r.one_absorbing_primary,
                    brute=None if brute is None else list(brute))], None


def _int_gcd(L):
    if not L.is_proper():
        return 0, [], None
    r = classify_int_submodule(L)
    brute = brute_refute_int_submodule(L)
    if r.one_absorbing_primary != (brute is None):
        return 1, [_wit(lattice=L.to_json(), reduced=r.one_absorbing_primary,
                        brute=None if brute is None else [brute[0], brute[1], list(brute[2])])], None
    return 1, [], None


def _int_mrad(L):
    if not L.is_proper():
        return 0, [], None
    base = m_radical_int(L)
    bound = max(2 * torsion_exponent(L), 50)
    wide = m_radical_int(L, prime_bound=bound)
    if base != wide:
        return 1, [_wit(lattice=L.to_json(), m_radical=base.to_json(), wide=wide.to_json())], None
    return 1, [], None


# coverings -----------------------------------------------------------------------------

def _ef(C: Covering):
    if not _mult(C.module):
        return 0, [], None
    v = efficient_check(C)
    if not v.hypothesis_holds:
        return 0, [], None
    return 1, ([] if v.conclusion_holds else [_wit(covering=C.describe(), **v.witness)]), None


def _av(C: Covering):
    if not _mult(C.module):
        return 0, [], None
    v = avoidance_check(C)
    if not v.hypothesis_holds:
        return 0, [], None
    return 1, ([] if v.conclusion_holds else [_wit(covering=C.describe())]), None


def _eff2(C: Covering):
    if C.n != 2:
        return 0, [], None
    return 1, ([_wit(covering=C.describe())] if is_efficient(C) else []), None


def _reduce(C: Covering):
    R = reduce_to_efficient(C)
    ok = R.covers() and is_efficient(R) and all(any(m is x for x in C.members) for m in R.members)
    return 1, ([] if ok else [_wit(covering=C.describe(), reduced=R.describe())]), None


def _av_quot(C: Covering):
    """Avoidance in M/N, checked against the lifted covering in M."""
    Q = C.module
    if Q.descriptor[0] != "quotient" or not _mult(Q):
        return 0, [], None
    v = avoidance_check(C)
    if not v.hypothesis_holds:
        return 0, [], None
    M, coset_of = Q.parts
    lift = lambda X: M.submodule_from_elements(np.flatnonzero(X.mask[coset_of]).tolist())
    lifted = Covering(lift(C.target), tuple(lift(X) for X in C.members))
    bad = []
    if not v.conclusion_holds:
        bad.append(_wit(covering=C.describe(), clause="quotient"))
    lv = avoidance_check(lifted, strict=False)
    if lv.hypothesis_holds and not lv.conclusion_holds:
        bad.append(_wit(covering=C.describe(), clause="lift"))
    return 1, bad, None


def _ring_members(C: Covering):
    M = C.module
    R = M.ring
    if M.descriptor[0] != "regular":
        return None
    as_ideal = lambda X: R.ideal_from_elements(X.elements)
    return as_ideal(C.target), [as_ideal(X) for X in C.members]


def _ef_ring(C: Covering):
    got = _ring_members(C)
    if got is None or C.n <= 2 or not is_efficient(C):
        return 0, [], None
    _, members = got
    if ring_radical_condition_witness(members) is not None:
        return 0, [], None
    hits = [i for i, I in enumerate(members) if ideal_report(I).one_absorbing_primary]
    return 1, ([_wit(covering=C.describe(), one_ap=hits)] if hits else []), None


def _av_ring(C: Covering):
    got = _ring_members(C)
    if got is None:
        return 0, [], None
    T, members = got
    if sum(not ideal_report(I).one_absorbing_primary for I in members) > 2:
        return 0, [], None
    if ring_radical_condition_witness(members) is not None:
        return 0, [], None
    ok = any(T <= I for I in members)
    return 1, ([] if ok else [_wit(covering=C.describe())]), None


# catalog ------------------------------------------------------------------------------------

def law_catalog() -> list[Law]:
    L = Law
    return [
        L("L-CHAIN", "prime submodules are 1-absorbing primary, and 1-absorbing primary "
          "submodules are 2-absorbing primary", "submodule",
          "N proper", "prime => 1AP => 2AP-primary; prime => primary; 2-absorbing => 2AP-primary",
          _chain),
        L("L-CHAIN-IDEAL", "maximal => prime => primary => 1-absorbing primary => "
          "2-absorbing primary for ideals", "ideal", "I proper", "each implication", _chain_ideal),
        L("L-L1", "four equivalent characterisations of 1-absorbing primary submodules",
          "submodule", "N proper", "the four clauses agree", _l1),
        L("L-TN", "1-absorbing primary via products of three submodules in multiplication "
          "modules", "module", "M multiplication", "N 1AP iff N1N2N3 <= N forces N1N2 <= N or "
          "N3 <= M-rad(N)", _tn),
        L("L-LEM9", "(IM:M) = I in faithful multiplication modules", "module",
          "M faithful multiplication", "(IM:M) = I for every ideal I", _lem9),
        L("L-T0a", "I is a 1-absorbing primary ideal iff IM is a 1-absorbing primary submodule",
          "module", "M faithful multiplication", "equivalence for every ideal", _t0a),
        L("L-T0b", "N is 1-absorbing primary iff (N:M) is a 1-absorbing primary ideal",
          "submodule", "M faithful multiplication", "equivalence", _t0b),
        L("L-T0c", "N is 1-absorbing primary iff N = IM for a 1-absorbing primary ideal I",
          "submodule", "M faithful multiplication", "equivalence", _t0c),
        L("L-T1a", "sqrt((N:M)) is prime for 1-absorbing primary N", "submodule",
          "M multiplication, N 1AP", "sqrt((N:M)) prime", _t1("a")),
        L("L-T1b", "sqrt((N:m)) is prime for m outside M-rad(N)", "submodule",
          "M multiplication, N 1AP", "sqrt((N:m)) prime and contains sqrt((N:M))", _t1("b")),
        L("L-T1c", "M-rad(N) is a prime submodule for 1-absorbing primary N", "submodule",
          "M multiplication, N 1AP", "M-rad(N) prime", _t1("c")),
        L("L-INT", "intersections of P-1-absorbing primary submodules are P-1-absorbing "
          "primary", "module", "M multiplication, family with common P", "meet is P-1AP", _int),
        L("L-MRAD-MULT", "M-rad(N) = sqrt((N:M))M in multiplication modules", "submodule",
          "M multiplication, N proper", "equality", _mrad_mult),
        L("L-RAD-HOM", "epimorphisms carry M-radicals to M-radicals", "hom",
          "f onto; N contains ker f", "f(M-rad N) = M-rad f(N); f^-1(M-rad K) = M-rad f^-1(K)",
          _rad_hom),
        L("L-F1", "preimages of 1-absorbing primary submodules are 1-absorbing primary", "hom",
          "N2 1AP, f^-1(N2) proper", "f^-1(N2) 1AP", _f1),
        L("L-F2", "epimorphic images of 1-absorbing primary submodules containing the kernel",
          "hom", "f onto, ker f <= N1, N1 1AP", "f(N1) 1AP", _f2),
        L("L-CQ", "N1 is 1-absorbing primary in M iff N1/N2 is in M/N2", "quotient",
          "N2 <= N1", "equivalence", _cq),
        L("L-TC", "N1 x M2 1-absorbing primary in M1 x M2 forces N1 1-absorbing primary",
          "product", "N1 proper, N1 x M2 1AP", "N1 1AP", _tc),
        L("L-MRAD-PROD", "M-rad(N1 x N2) = M-rad(N1) x M-rad(N2)", "product", "always",
          "equality", _mrad_prod),
        L("L-S", "localization keeps 1-absorbing primary submodules", "localization",
          "N 1AP, S^-1 N proper", "S^-1 N 1AP", _s),
        L("L-S-MAP", "canonical maps into a localization", "localization", "always",
          "linear maps, S lands in the units", _s_map),
        L("L-ID", "a 1-absorbing primary homogeneous ideal I(+)N gives a 1-absorbing primary "
          "ideal I", "idealization", "I(+)N homogeneous and 1AP", "I 1AP", _id),
        L("L-ID-RAD", "sqrt(I(+)N) = sqrt(I)(+)M", "idealization", "I(+)N homogeneous",
          "equality", _id_rad),
        L("L-NEG", "an intersection of 1-absorbing primary submodules need not be one: "
          "2Z and 3Z against 6Z", "fixture", "fixture", "2Z, 3Z 1AP; 6Z not, witness (2,2,3)",
          _neg),
        L("L-INT-CLOSED", "closed-form classification of nZ against bounded search",
          "int_ideal", "n != 1", "agreement", _int_closed),
        L("L-INT-GCD", "gcd-class reduction against direct colon computation", "int_lattice",
          "N proper", "agreement on 1AP", _int_gcd),
        L("L-INT-MRAD", "M-rad over Z^k only needs the primes dividing the torsion exponent",
          "int_lattice", "N proper", "stable under a larger prime bound", _int_mrad),
        L("L-EF", "efficient coverings with n > 2 under the radical condition have no "
          "1-absorbing primary member", "covering", "M multiplication, efficient, n > 2, "
          "radical condition", "no member 1AP", _ef),
        L("L-AV", "avoidance: a covering with at most two non-1AP members under the radical "
          "condition is trivial", "covering", "M multiplication, <= 2 non-1AP members, radical "
          "condition", "N <= N_k for some k", _av),
        L("L-EFF2", "a covering by two submodules is never efficient", "covering", "n = 2",
          "not efficient", _eff2),
        L("L-REDUCE", "greedy reduction yields an efficient sub-covering", "covering",
          "always", "efficient, covers, members drawn from the input", _reduce),
        L("L-AV-QUOT", "avoidance passes to quotients M/N", "covering",
          "covering of M/N satisfying the avoidance hypothesis", "conclusion in M/N and for "
          "the lifted covering", _av_quot),
        L("L-EF-RING", "ring form of the efficient covering result", "covering",
          "ideals, efficient, n > 2, radical condition", "no member 1AP", _ef_ring),
        L("L-AV-RING", "ring form of the avoidance result", "covering",
          "ideals, <= 2 non-1AP members, radical condition", "I <= I_k for some k", _av_ring),
    ]


def law_ids() -> list[str]:
    return [law.id for law in law_catalog()]


def get_law(law_id: str) -> Law:
    for law in law_catalog():
        if law.id == law_id:
            return law
    raise KeyError(f"unknown law id {law_id!r}")

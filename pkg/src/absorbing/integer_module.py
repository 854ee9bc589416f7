"""Ideals of Z and submodules of Z^k, kept exact through Hermite Normal Form.

A lattice stores its basis as row vectors in echelon form: positive pivots,
entries above each pivot reduced into [0, pivot).  That form is unique per
lattice, so equality is basis equality.

The classification of a lattice N in Z^k rests on one reduction: for d != 0,
(N :_M d) = {m : dm in N} is the d-torsion of Z^k/N pulled back, which is
the gcd(d, e)-torsion with e the exponent of the torsion part of Z^k/N.
Every scalar quantifier therefore collapses to the divisors of e.
"""

from __future__ import annotations

import numpy as np

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product as iproduct
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from sympy import divisors, primefactors, primerange

from .errors import AlgebraError, CapExceeded

MAX_RANK = 4
MAX_ENTRY = 2 ** 31


# Hermite normal form ----------------------------------------------------------

def _echelon(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Integer row reduction on the first ``ncols`` columns (rows may be longer)."""
    rows = [list(r) for r in rows]
    piv_row = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(piv_row, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(rows[i][col]))
            rows[piv_row], rows[i_min] = rows[i_min], rows[piv_row]
            p = rows[piv_row]
            done = True
            for i in range(piv_row + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // p[col]
                    rows[i] = [x - q * y for x, y in zip(rows[i], p)]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if piv_row < len(rows) and rows[piv_row][col] != 0:
            if rows[piv_row][col] < 0:
                rows[piv_row] = [-x for x in rows[piv_row]]
            p = rows[piv_row]
            for i in range(piv_row):
                q = rows[i][col] // p[col]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], p)]
            piv_row += 1
    return rows


def hnf(vectors: Iterable[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    """Canonical echelon basis of the lattice spanned by ``vectors`` in Z^k."""
    rows = [list(v) for v in vectors]
    for v in rows:
        if len(v) != k:
            raise AlgebraError(f"vector {v} does not have length {k}")
    red = _echelon(rows, k)
    return tuple(tuple(r) for r in red if any(r))


def integer_kernel(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of {c in Z^r : sum c_i v_i = 0} for r vectors of a common length."""
    r = len(vectors)
    if r == 0:
        return []
    k = len(vectors[0])
    aug = [list(v) + [1 if j == i else 0 for j in range(r)] for i, v in enumerate(vectors)]
    red = _echelon(aug, k)
    kern = [tuple(row[k:]) for row in red if not any(row[:k])]
    return list(hnf(kern, r)) if kern else []


# lattices ----------------------------------------------------------------------

@dataclass(frozen=True)
class IntLattice:
    ambient_rank: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_rank

    def __contains__(self, v) -> bool:
        v = list(v)
        if len(v) != self.ambient_rank:
            raise AlgebraError("vector length does not match the ambient rank")
        for row in self.basis:
            col = next(i for i, x in enumerate(row) if x)
            if v[col] % row[col]:
                return False
            q = v[col] // row[col]
            v = [x - q * y for x, y in zip(v, row)]
        return not any(v)

    def __le__(self, other: "IntLattice") -> bool:
        return all(b in other for b in self.basis)

    def __lt__(self, other: "IntLattice") -> bool:
        return self <= other and self != other

    def is_proper(self) -> bool:
        return self != whole_lattice(self.ambient_rank)

    def to_json(self):
        return [list(b) for b in self.basis]

    def __repr__(self):
        return f"IntLattice({self.ambient_rank}, {list(map(list, self.basis))})"


def lattice(generators: Iterable[Sequence[int]], ambient_rank: int) -> IntLattice:
    """HNF lattice spanned by ``generators`` in Z^ambient_rank."""
    if not 1 <= ambient_rank <= MAX_RANK:
        raise CapExceeded(f"ambient rank must be in 1..{MAX_RANK}")
    gens = [tuple(int(x) for x in g) for g in generators]
    for g in gens:
        if any(abs(x) >= MAX_ENTRY for x in g):
            raise CapExceeded(f"entry of {g} exceeds 2^31")
    return IntLattice(ambient_rank, hnf(gens, ambient_rank))


def whole_lattice(k: int) -> IntLattice:
    return IntLattice(k, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))


def zero_lattice(k: int) -> IntLattice:
    return IntLattice(k, ())


def _same_rank(N: IntLattice, K: IntLattice):
    if N.ambient_rank != K.ambient_rank:
        raise AlgebraError("lattices live in different ambient ranks")


def lattice_sum(N: IntLattice, K: IntLattice) -> IntLattice:
    _same_rank(N, K)
    return IntLattice(N.ambient_rank, hnf(N.basis + K.basis, N.ambient_rank))


def lattice_intersection(N: IntLattice, K: IntLattice) -> IntLattice:
    """Relations c.N = d.K read off the integer kernel of the stacked bases."""
    _same_rank(N, K)
    k = N.ambient_rank
    if not N.basis or not K.basis:
        return zero_lattice(k)
    rel = integer_kernel(list(N.basis) + [tuple(-x for x in b) for b in K.basis])
    r = len(N.basis)
    vecs = [[sum(c[i] * N.basis[i][j] for i in range(r)) for j in range(k)] for c in rel]
    return IntLattice(k, hnf(vecs, k))


def saturation(N: IntLattice) -> IntLattice:
    """{m : tm in N for some nonzero integer t}, the rational span cut back to Z^k."""
    k = N.ambient_rank
    if not N.basis:
        return zero_lattice(k)
    cols = [tuple(b[j] for b in N.basis) for j in range(k)]
    orth = integer_kernel(cols)            # y with y.n = 0 for every basis vector n
    if not orth:
        return whole_lattice(k)
    orth_cols = [tuple(y[j] for y in orth) for j in range(k)]
    return IntLattice(k, tuple(integer_kernel(orth_cols)))


def lattice_ops(N: IntLattice, K, kind: str):
    """membership (K a vector), sum, intersection, saturation (K ignored)."""
    if kind == "membership":
        return tuple(K) in N
    if kind == "sum":
        return lattice_sum(N, K)
    if kind == "intersection":
        return lattice_intersection(N, K)
    if kind == "saturation":
        return saturation(N)
    raise ValueError(f"unknown lattice operation {kind!r}")


def scaled_whole(d: int, k: int) -> IntLattice:
    return lattice([[d if i == j else 0 for j in range(k)] for i in range(k)], k)


def colon_in_lattice(N: IntLattice, d: int) -> IntLattice:
    """(N :_M d) = {m : dm in N}, computed as (N intersect dZ^k) / d."""
    k = N.ambient_rank
    d = abs(int(d))
    if d == 0:
        return whole_lattice(k)
    meet = lattice_intersection(N, scaled_whole(d, k))
    return IntLattice(k, hnf([[x // d for x in b] for b in meet.basis], k))


def order_modulo(N: IntLattice, v: Sequence[int]) -> int:
    """Least t > 0 with t.v in N, or 0 when no multiple lands in N."""
    k = N.ambient_rank
    line = lattice([v], k)
    if not line.basis:
        return 1
    meet = lattice_intersection(N, line)
    if not meet.basis:
        return 0
    w, b = meet.basis[0], line.basis[0]
    col = next(i for i, x in enumerate(b) if x)
    return abs(w[col] // b[col])


def torsion_exponent(N: IntLattice) -> int:
    """Exponent of the torsion subgroup of Z^k/N (1 when torsion-free)."""
    sat = saturation(N)
    return reduce(lcm, (order_modulo(N, s) for s in sat.basis), 1)


# ideals of Z --------------------------------------------------------------------

@dataclass(frozen=True)
class IntIdeal:
    generator: int

    def __post_init__(self):
        object.__setattr__(self, "generator", abs(int(self.generator)))

    @property
    def is_proper(self) -> bool:
        return self.generator != 1

    def __contains__(self, x: int) -> bool:
        n = self.generator
        return x == 0 if n == 0 else x % n == 0

    def __le__(self, other: "IntIdeal") -> bool:
        return self.generator in other

    def to_json(self):
        return self.generator

    def __repr__(self):
        return f"{self.generator}Z"


def squarefree_part(n: int) -> int:
    n = abs(n)
    return 0 if n == 0 else reduce(lambda a, p: a * p, primefactors(n), 1)


def int_radical(I: IntIdeal) -> IntIdeal:
    return IntIdeal(squarefree_part(I.generator))


def colon_ideal_int(N: IntLattice) -> IntIdeal:
    """(N :_Z Z^k): 0 with free rank in the quotient, else its exponent."""
    if not N.is_full:
        return IntIdeal(0)
    return IntIdeal(torsion_exponent(N))


def m_radical_int(N: IntLattice, prime_bound: Optional[int] = None) -> IntLattice:
    """Intersection of the prime submodules of Z^k containing N.

    Prime submodules of Z^k are the proper saturated lattices and the proper
    lattices P with pZ^k inside P.  The saturated ones above N meet in
    sat(N); for a fixed p the second kind above N meet in N + pZ^k.  When p
    does not divide the torsion exponent e, every s in sat(N) satisfies
    es in N and s = u(es) + v(ps), so N + pZ^k already contains sat(N).  Only
    primes dividing e can cut further.

    ``prime_bound`` switches to the definitional intersection over every
    prime up to the bound (used to check stability of the above).
    """
    k = N.ambient_rank
    result = saturation(N)
    if prime_bound is None:
        primes = primefactors(torsion_exponent(N))
    else:
        primes = list(primerange(2, prime_bound + 1))
    for p in primes:
        cand = lattice_sum(N, scaled_whole(p, k))
        if cand.is_proper():
            result = lattice_intersection(result, cand)
    return result


# classification: ideals of Z ---------------------------------------------------

@dataclass
class IntIdealReport:
    n: int
    proper: bool
    prime: bool
    maximal: bool
    primary: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    one_absorbing_primary: bool
    radical: IntIdeal
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("proper", "prime", "maximal", "primary", "two_absorbing",
             "two_absorbing_primary", "one_absorbing_primary")

    def flags(self) -> dict:
        return {f: getattr(self, f) for f in self.FLAGS}

    def to_json(self) -> dict:
        return {
            "ideal": self.n,
            "flags": self.flags(),
            "radical": self.radical.generator,
            "witnesses": {k: None if v is None else list(v) for k, v in self.witnesses.items()},
        }


def _nonunits_upto(bound: int):
    yield 0
    yield from range(2, bound + 1)


def _prime_power(n: int) -> bool:
    return len(primefactors(n)) == 1


def _omega(n: int) -> int:
    from sympy import factorint
    return sum(factorint(n).values())


def _int_witness_1ap(n: int, rad: int):
    for a in range(2, n + 1):
        for b in range(2, n + 1):
            d = a * b
            if d % n == 0:
                continue
            t = n // gcd(d, n)
            for j in range(1, rad + 1):
                c = t * j
                if c >= 2 and c % rad:
                    return a, b, c
    return None


def _int_witness_2ap(n: int, rad: int, target: int):
    """First (a, b, c) with abc in nZ, ab not in nZ, ac and bc outside targetZ."""
    for a in range(2, n + 1):
        for b in range(2, n + 1):
            d = a * b
            if d % n == 0:
                continue
            t = n // gcd(d, n)
            for j in range(1, n + 1):
                c = t * j
                if (a * c) % target and (b * c) % target:
                    return a, b, c
    return None


def _int_witness_pair(n: int, target: int):
    """First (a, b) with ab in nZ, a not in nZ, b not in targetZ."""
    for a in range(2, n + 1):
        if a % n == 0:
            continue
        for b in range(2, n + 1):
            if (a * b) % n == 0 and b % target:
                return a, b
    return None


def classify_int_ideal(I) -> IntIdealReport:
    """Closed-form flags for nZ (n != 1), with lexicographically first witnesses.

    nZ is prime iff n is 0 or prime; primary and 1-absorbing primary iff n is
    0 or a prime power; 2-absorbing iff n is 0 or has at most two prime
    factors with multiplicity; 2-absorbing primary iff n is 0 or has at most
    two distinct prime factors.  Witnesses are searched over non-negative
    integers in lexicographic order (sign never matters for membership).
    """
    n = I.generator if isinstance(I, IntIdeal) else abs(int(I))
    if n == 1:
        raise AlgebraError("Z is not a proper ideal of itself")
    rad = squarefree_part(n)
    if n == 0:
        wit = {k: None for k in IntIdealReport.FLAGS[1:]}
        wit["maximal"] = (2,)
        return IntIdealReport(0, True, True, False, True, True, True, True, IntIdeal(0), wit)
    nprimes = len(primefactors(n))
    flags = dict(prime=nprimes == 1 and n == rad, maximal=nprimes == 1 and n == rad,
                 primary=nprimes == 1, one_absorbing_primary=nprimes == 1,
                 two_absorbing=_omega(n) <= 2, two_absorbing_primary=nprimes <= 2)
    wit = {}
    wit["prime"] = None if flags["prime"] else _int_witness_pair(n, n)
    wit["maximal"] = None if flags["maximal"] else (min(primefactors(n)),)
    wit["primary"] = None if flags["primary"] else _int_witness_pair(n, rad)
    wit["one_absorbing_primary"] = None if flags["one_absorbing_primary"] else _int_witness_1ap(n, rad)
    wit["two_absorbing"] = None if flags["two_absorbing"] else _int_witness_2ap(n, rad, n)
    wit["two_absorbing_primary"] = (None if flags["two_absorbing_primary"]
                                    else _int_witness_2ap(n, rad, rad))
    return IntIdealReport(n, True, radical=IntIdeal(rad), witnesses=wit, **flags)


# classification: submodules of Z^k -------------------------------------------

@dataclass
class IntSubmoduleReport:
    lattice: IntLattice
    proper: bool
    prime: bool
    primary: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    one_absorbing_primary: bool
    p_one_absorbing_primary_for: Optional[int]
    colon_ideal: IntIdeal
    colon_radical: IntIdeal
    m_radical: IntLattice
    torsion_exponent: int
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("proper", "prime", "primary", "two_absorbing", "two_absorbing_primary",
             "one_absorbing_primary")

    def flags(self) -> dict:
        return {f: getattr(self, f) for f in self.FLAGS}

    def to_json(self) -> dict:
        def fmt(v):
            if v is None:
                return None
            return [x if isinstance(x, int) else list(x) for x in v]
        return {
            "submodule": self.lattice.to_json(),
            "flags": self.flags(),
            "p_one_absorbing_primary_for": self.p_one_absorbing_primary_for,
            "colon_ideal": self.colon_ideal.generator,
            "colon_radical": self.colon_radical.generator,
            "m_radical": self.m_radical.to_json(),
            "witnesses": {k: fmt(v) for k, v in self.witnesses.items()},
        }


def _small_vector_outside(L: IntLattice, target: IntLattice, box: int = 4):
    """A short vector of L outside ``target``: box search, then basis fallback."""
    k = L.ambient_rank
    rng = sorted(range(-box, box + 1), key=lambda x: (abs(x), x < 0))
    cands = sorted(iproduct(rng, repeat=k),
                   key=lambda v: (max(map(abs, v)), [(abs(x), x < 0) for x in v]))
    for v in cands:
        if any(v) and v in L and v not in target:
            return v
    for b in L.basis:
        if b not in target:
            return b
    return None


class _ClassTables:
    """Per-lattice tables indexed by gcd class g | e."""

    def __init__(self, N: IntLattice):
        self.N = N
        self.k = N.ambient_rank
        self.e = torsion_exponent(N)
        self.full = N.is_full
        self.divs = divisors(self.e)
        self.mrad = m_radical_int(N)
        self.colon_N = {g: colon_in_lattice(N, g) for g in self.divs}
        self.colon_R = {g: colon_in_lattice(self.mrad, g) for g in self.divs}

    def cls(self, a: int) -> Optional[int]:
        return None if a == 0 else gcd(a, self.e)

    def in_colon(self, a: int) -> bool:
        if a == 0:
            return True
        return self.full and a % self.e == 0

    def in_colon_radical(self, a: int) -> bool:
        if a == 0:
            return True
        return self.full and a % squarefree_part(self.e) == 0


def classify_int_submodule(N: IntLattice) -> IntSubmoduleReport:
    """Classify N in Z^k.  k = 1 defers to the ideal classification of nZ."""
    k = N.ambient_rank
    colon = colon_ideal_int(N)
    crad = int_radical(colon)
    if not N.is_proper():
        return IntSubmoduleReport(N, False, False, False, False, False, False, None,
                                  colon, crad, N, 1,
                                  {f: None for f in IntSubmoduleReport.FLAGS[1:]})
    t = _ClassTables(N)
    if k == 1:
        rep = classify_int_ideal(colon)
        wit = {f: (None if rep.witnesses[f] is None else
                   tuple(rep.witnesses[f][:-1]) + ((rep.witnesses[f][-1],),))
               for f in ("prime", "primary")}
        for f in ("two_absorbing", "two_absorbing_primary", "one_absorbing_primary"):
            w = rep.witnesses[f]
            wit[f] = None if w is None else (w[0], w[1], (w[2],))
        P = crad.generator if rep.one_absorbing_primary else None
        return IntSubmoduleReport(N, True, rep.prime, rep.primary, rep.two_absorbing,
                                  rep.two_absorbing_primary, rep.one_absorbing_primary, P,
                                  colon, crad, t.mrad, t.e, wit)
    wit = {
        "prime": _single_scan(t, lambda a: t.in_colon(a), N),
        "primary": _single_scan(t, lambda a: t.in_colon_radical(a), N),
        "two_absorbing": _pair_scan(t, nonunits=False, target=t.colon_N),
        "two_absorbing_primary": _pair_scan(t, nonunits=False, target=t.colon_R),
        "one_absorbing_primary": _pair_scan(t, nonunits=True, target=None),
    }
    one_ap = wit["one_absorbing_primary"] is None
    P = None
    if one_ap and (crad.generator == 0 or _prime_power(crad.generator)):
        P = crad.generator
    return IntSubmoduleReport(
        N, True, prime=wit["prime"] is None, primary=wit["primary"] is None,
        two_absorbing=wit["two_absorbing"] is None,
        two_absorbing_primary=wit["two_absorbing_primary"] is None,
        one_absorbing_primary=one_ap, p_one_absorbing_primary_for=P,
        colon_ideal=colon, colon_radical=crad, m_radical=t.mrad,
        torsion_exponent=t.e, witnesses=wit)


def _scan_bound(e: int) -> int:
    # a prime in (e, 2e] exists, so every gcd class has a representative <= 2e + 2
    return 2 * e + 2


def _single_scan(t: _ClassTables, absorbed, N: IntLattice):
    """First (a, m) with am in N, m not in N and a not absorbed."""
    for a in range(1, _scan_bound(t.e) + 1):
        if absorbed(a):
            continue
        T = t.colon_N[t.cls(a)]
        if not T <= N:
            return a, _small_vector_outside(T, N)
    return None


def _pair_scan(t: _ClassTables, nonunits: bool, target):
    """Lexicographic scan over (a, b) classes; ``target`` None means the 1AP test.

    Everything depends on a and b only through their gcd classes, so the
    first failing pair is made of least class representatives; scanning
    those pairs in order gives the same answer as the full double loop.
    """
    start = 2 if nonunits else 1
    reps: dict = {}
    for a in range(start, _scan_bound(t.e) + 1):
        reps.setdefault(t.cls(a), a)
    for a, b in sorted((ra, rb) for ra in reps.values() for rb in reps.values()):
        d = a * b
        if t.in_colon(d):
            continue
        ka, kb = t.cls(a), t.cls(b)
        T = t.colon_N[t.cls(d)]
        if target is None:
            if not T <= t.mrad:
                return a, b, _small_vector_outside(T, t.mrad)
        elif not (T <= target[ka] or T <= target[kb]):
            m = next((v for v in T.basis if v not in target[ka] and v not in target[kb]),
                     None) or _union_escape(T, target[ka], target[kb])
            return a, b, m
    return None


def _union_escape(T: IntLattice, A: IntLattice, B: IntLattice):
    """A vector of T in neither A nor B (exists when T is in neither)."""
    xa = next(v for v in T.basis if v not in A)
    xb = next(v for v in T.basis if v not in B)
    if xa not in B:
        return xa
    if xb not in A:
        return xb
    return tuple(x + y for x, y in zip(xa, xb))


# brute-force oracles ------------------------------------------------------------

@lru_cache(maxsize=4)
def _brute_tables(bound: int):
    vals = np.array(list(_nonunits_upto(bound)), dtype=np.int64)
    ab = vals[:, None] * vals[None, :]
    abc = ab[:, :, None] * vals[None, None, :]
    # int32 holds bound**3 for the bounds used here and is much faster to reduce
    dtype = np.int32 if bound ** 3 < 2 ** 31 else np.int64
    return vals, ab.astype(dtype), abc.astype(dtype)


def brute_refute_int_ideal(n: int, bound: int = 64):
    """Definitional search for a 1-absorbing primary refutation of nZ.

    a, b, c range over non-units with |x| <= bound; signs do not affect
    membership, so only 0 and 2..bound are tried.  Returns the
    lexicographically first triple or None.
    """
    n = abs(int(n))
    rad = squarefree_part(n)
    vals, ab, abc = _brute_tables(bound)

    def member(x, g):
        return x == 0 if g == 0 else x % g == 0

    fail = (~member(ab, n))[:, :, None] & member(abc, n) & ~member(vals, rad)[None, None, :]
    hits = np.argwhere(fail)
    if len(hits) == 0:
        return None
    i, j, k = hits[0]
    return int(vals[i]), int(vals[j]), int(vals[k])


def brute_refute_int_submodule(N: IntLattice, bound: Optional[int] = None):
    """1-absorbing primary refutation of N in Z^k without the gcd-class reduction.

    (N :_M ab) is computed by direct HNF for every product of non-units up to
    ``bound`` (default 2e + 2) and compared against M-rad(N).
    """
    k = N.ambient_rank
    mrad = m_radical_int(N)
    if bound is None:
        bound = _scan_bound(torsion_exponent(N))
    e_vectors = [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]
    cache: dict[int, Optional[tuple]] = {}
    for a in range(2, bound + 1):
        for b in range(2, bound + 1):
            d = a * b
            if all(tuple(d * x for x in v) in N for v in e_vectors):
                continue                   # ab in (N:M)
            if d not in cache:
                T = colon_in_lattice(N, d)
                cache[d] = next((v for v in T.basis if v not in mrad), None)
            if cache[d] is not None:
                return a, b, cache[d]
    return None

"""Definitional oracles in plain Python, independent of the numpy code paths.

Everything here works on nested lists and sets, recomputes submodules by
closure, and decides each property straight from its definition.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


class Tables:
    """A module given by plain tables: ring add/mul on range(r), module add/act on range(m)."""

    def __init__(self, radd, rmul, madd, mact, integer_lift=False):
        # integer_lift: scalars are classes of Z, each of which contains non-units
        self.integer_lift = integer_lift
        self.radd = [list(map(int, row)) for row in radd]
        self.rmul = [list(map(int, row)) for row in rmul]
        self.madd = [list(map(int, row)) for row in madd]
        self.mact = [list(map(int, row)) for row in mact]
        self.r = len(self.radd)
        self.m = len(self.madd)
        self.rzero = next(z for z in range(self.r) if all(self.radd[z][x] == x for x in range(self.r)))
        self.one = next(o for o in range(self.r) if all(self.rmul[o][x] == x for x in range(self.r)))
        self.mzero = next(z for z in range(self.m) if all(self.madd[z][x] == x for x in range(self.m)))

    @classmethod
    def of(cls, M):
        lift = M.ring.descriptor[0] == "integers"
        return cls(M.ring.add, M.ring.mul, M.add, M.act, integer_lift=lift)

    def units(self):
        if self.integer_lift:
            return set()
        return {a for a in range(self.r) if any(self.rmul[a][b] == self.one for b in range(self.r))}

    def closure(self, gens) -> frozenset:
        S = {self.mzero}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in S:
                continue
            S.add(x)
            new = {self.mact[r][x] for r in range(self.r)}
            new |= {self.madd[x][y] for y in S}
            frontier.extend(v for v in new if v not in S)
        # close again under addition of everything collected
        changed = True
        while changed:
            changed = False
            for x in list(S):
                for y in list(S):
                    z = self.madd[x][y]
                    if z not in S:
                        S.add(z)
                        changed = True
        return frozenset(S)

    def submodules(self, max_gens=3) -> set:
        out = set()
        elems = range(self.m)
        for k in range(0, max_gens + 1):
            for gens in combinations(elems, k):
                out.add(self.closure(gens))
        return out

    def colon(self, N, X) -> set:
        return {r for r in range(self.r) if all(self.mact[r][x] in N for x in X)}

    def ring_radical(self, I) -> set:
        out = set()
        for a in range(self.r):
            p = a
            for _ in range(self.r):
                if p in I:
                    out.add(a)
                    break
                p = self.rmul[p][a]
        return out

    def is_prime(self, N) -> bool:
        if len(N) == self.m:
            return False
        col = self.colon(N, range(self.m))
        return all(self.mact[a][x] not in N or x in N or a in col
                   for a in range(self.r) for x in range(self.m))

    def m_radical(self, N, subs) -> frozenset:
        primes = [P for P in subs if N <= P and self.is_prime(P)]
        if not primes:
            return frozenset(range(self.m))
        out = set(range(self.m))
        for P in primes:
            out &= P
        return frozenset(out)

    def is_1ap(self, N, subs) -> bool:
        if len(N) == self.m:
            return False
        col = self.colon(N, range(self.m))
        rad = self.m_radical(N, subs)
        nu = [a for a in range(self.r) if a not in self.units()]
        for a in nu:
            for b in nu:
                ab = self.rmul[a][b]
                if ab in col:
                    continue
                for x in range(self.m):
                    if self.mact[ab][x] in N and x not in rad:
                        return False
        return True

    def is_2ap(self, N, subs) -> bool:
        if len(N) == self.m:
            return False
        col = self.colon(N, range(self.m))
        rad = self.m_radical(N, subs)
        for a in range(self.r):
            for b in range(self.r):
                ab = self.rmul[a][b]
                if ab in col:
                    continue
                for x in range(self.m):
                    if (self.mact[ab][x] in N and self.mact[a][x] not in rad
                            and self.mact[b][x] not in rad):
                        return False
        return True

    def is_multiplication(self, subs) -> bool:
        full = range(self.m)
        for N in subs:
            col = self.colon(N, full)
            IM = self.closure({self.mact[r][x] for r in col for x in full})
            if IM != N:
                return False
        return True


# residue rings of Z, by integer arithmetic alone ---------------------------------

def zn_units(n: int) -> list[int]:
    return [a for a in range(n) if gcd(a, n) == 1]


def zn_ideal(n: int, d: int) -> frozenset:
    return frozenset(range(0, n, gcd(d, n))) if d % n else frozenset({0})


def zn_ideals(n: int) -> list[frozenset]:
    return sorted({zn_ideal(n, d) for d in range(n)}, key=lambda s: (len(s), sorted(s)))


def zn_radical(n: int, I: frozenset) -> frozenset:
    return frozenset(a for a in range(n) if any(pow(a, k, n) in I for k in range(1, n + 1)))


def zn_is_1ap(n: int, I: frozenset) -> bool:
    if len(I) == n:
        return False
    nu = [a for a in range(n) if gcd(a, n) != 1]
    rad = zn_radical(n, I)
    for a in nu:
        for b in nu:
            if (a * b) % n in I:
                continue
            for c in nu:
                if (a * b * c) % n in I and c not in rad:
                    return False
    return True


def zn_is_prime(n: int, I: frozenset) -> bool:
    if len(I) == n:
        return False
    return all((a * b) % n not in I or a in I or b in I for a in range(n) for b in range(n))


# Z and Z^2, by definition on a box ------------------------------------------------------

def z_is_1ap_boxed(n: int, bound: int):
    """Witness (a, b, c) over 0 and 2..bound or None, straight from the definition."""
    def inI(x):
        return x == 0 if n == 0 else x % n == 0

    rad = 1
    m = n
    p = 2
    while m > 1 and p * p <= m:
        if m % p == 0:
            rad *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        rad *= m
    if n == 0:
        rad = 0

    def inR(x):
        return x == 0 if rad == 0 else x % rad == 0

    vals = [0] + list(range(2, bound + 1))
    for a in vals:
        for b in vals:
            if inI(a * b):
                continue
            for c in vals:
                if inI(a * b * c) and not inR(c):
                    return a, b, c
    return None


def in_lattice_2d(basis, v) -> bool:
    """Membership in the row span of an integer 2x2-or-smaller basis by Cramer's rule."""
    basis = [tuple(b) for b in basis]
    if not basis:
        return v == (0, 0)
    if len(basis) == 1:
        (p, q), (x, y) = basis[0], v
        if p * y - q * x != 0:
            return False
        if p:
            return x % p == 0 and (q * (x // p) == y)
        return q != 0 and y % q == 0
    (a, b), (c, d) = basis
    det = a * d - b * c
    x, y = v
    s_num = x * d - y * c
    t_num = a * y - b * x
    return s_num % det == 0 and t_num % det == 0

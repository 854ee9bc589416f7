"""Finite commutative rings with identity, materialized as operation tables.

Elements are small integers indexing the carrier.  Every quantifier over
ring elements becomes a loop (or a numpy broadcast) over those indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Optional

import numpy as np

from . import _closure
from .errors import AlgebraError, CapExceeded, MismatchError

DEFAULT_CAP = 256


class FiniteRing:
    """A finite commutative ring with non-zero identity.

    ``descriptor`` is a JSON-friendly tuple recording how the ring was built.
    ``labels[i]`` is the human-facing name of element ``i``.

    For ``integer_lift`` rings (Z/e standing in for the integers acting on a
    finite abelian group of exponent e) every residue class contains a
    non-unit integer, so ``units`` is empty and every element counts as a
    non-unit for the absorbing-type quantifiers.
    """

    def __init__(self, descriptor, labels, add, mul, *, integer_lift=False,
                 check=True, cap=DEFAULT_CAP, parts=None):
        size = len(labels)
        if size > cap:
            raise CapExceeded(f"ring carrier {size} exceeds cap {cap}")
        self.descriptor = descriptor
        self.labels = list(labels)
        self.size = size
        self.add = np.asarray(add, dtype=np.int32)
        self.mul = np.asarray(mul, dtype=np.int32)
        self.integer_lift = integer_lift
        self.parts = parts
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.zero = self._find_identity(self.add)
        self.one = self._find_identity(self.mul)
        if self.zero == self.one:
            raise AlgebraError("ring identity must be non-zero")
        self.neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
        if check:
            self._check_axioms()
        if integer_lift:
            self.units = frozenset()
        else:
            invertible = (self.mul == self.one).any(axis=1)
            self.units = frozenset(np.flatnonzero(invertible).tolist())
        self.nonunits = np.array([i for i in range(size) if i not in self.units], dtype=np.int64)
        self._ideal_cache: dict[frozenset, Ideal] = {}
        self._ideals: Optional[list[Ideal]] = None

    def _find_identity(self, table) -> int:
        n = self.size
        row = np.arange(n)
        for e in range(n):
            if np.array_equal(table[e], row) and np.array_equal(table[:, e], row):
                return e
        raise AlgebraError("operation table has no identity element")

    def _check_axioms(self):
        add, mul, n = self.add, self.mul, self.size
        if not (np.array_equal(add, add.T) and np.array_equal(mul, mul.T)):
            raise AlgebraError("ring tables are not commutative")
        if not (self.add[np.arange(n), self.neg] == self.zero).all():
            raise AlgebraError("addition has no inverses")
        for a in range(n):
            # (a*b)*c == a*(b*c) and a*(b+c) == a*b + a*c, for all b, c
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise AlgebraError("multiplication is not associative")
            if not np.array_equal(add[add[a]], add[a][add]):
                raise AlgebraError("addition is not associative")
            if not np.array_equal(mul[a][add], add[mul[a][:, None], mul[a][None, :]]):
                raise AlgebraError("multiplication does not distribute over addition")

    def __repr__(self):
        return f"FiniteRing({self.descriptor!r}, size={self.size})"

    # elements -----------------------------------------------------------

    def label(self, i: int):
        return self.labels[int(i)]

    def element(self, label) -> int:
        """Index of the element named ``label`` (residues are reduced)."""
        kind = self.descriptor[0]
        if kind in ("residue", "integers") and isinstance(label, int):
            return int(label) % self.size
        if kind == "product" and isinstance(label, (tuple, list)) and len(label) == 2:
            r1, r2 = self.parts
            return r1.element(label[0]) * r2.size + r2.element(label[1])
        if kind == "quotient" and not isinstance(label, str):
            parent, coset_of = self.parts
            return int(coset_of[parent.element(label)])
        if kind == "idealize" and isinstance(label, (tuple, list)) and len(label) == 2:
            base, module = self.parts
            return base.element(label[0]) * module.size + module.element(label[1])
        key = tuple(label) if isinstance(label, list) else label
        if key in self._index:
            return self._index[key]
        raise AlgebraError(f"{label!r} is not an element of {self.descriptor}")

    def is_unit(self, a: int) -> bool:
        return int(a) in self.units

    def power(self, a: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = int(self.mul[r, a])
        return r

    # ideals ---------------------------------------------------------------

    def principal(self, g: int) -> np.ndarray:
        return np.unique(self.mul[:, int(g)])

    def ideal_from_elements(self, elements, generators=None) -> "Ideal":
        key = frozenset(int(x) for x in elements)
        canonical = self._ideal_cache.get(key)
        if canonical is None:
            gens = _closure.greedy_generators(self.add, self.zero, key, self.principal)
            canonical = self._ideal_cache[key] = Ideal(self, key, gens)
        if generators is None:
            return canonical
        return Ideal(self, key, tuple(int(g) for g in generators))

    def whole(self) -> "Ideal":
        return self.ideal_from_elements(range(self.size))

    def zero_ideal(self) -> "Ideal":
        return self.ideal_from_elements([self.zero])

    def ideals(self) -> list["Ideal"]:
        """Every ideal, ordered by size then by sorted elements."""
        if self._ideals is None:
            cyclics = [self.principal(x) for x in range(self.size)]
            lattice = _closure.subgroup_lattice(self.add, self.zero, cyclics, cap=4096)
            self._ideals = [self.ideal_from_elements(s) for s in lattice]
        return self._ideals

    def proper_ideals(self) -> list["Ideal"]:
        """Ideals the absorbing quantifiers range over.

        For an integer lift every ideal of Z/e is the image of a proper ideal
        of Z (take d coprime to e for the whole ring), so all are returned.
        """
        if self.integer_lift:
            return list(self.ideals())
        return [I for I in self.ideals() if I.is_proper]


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    elements: frozenset
    generators: tuple = ()

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.size, dtype=bool)
        m[list(self.elements)] = True
        return m

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(sorted(self.elements), dtype=np.int64)

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.size

    def __contains__(self, x) -> bool:
        return int(x) in self.elements

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and other.ring is self.ring
                and other.elements == self.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: "Ideal") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Ideal") -> bool:
        return self.elements < other.elements

    def labels(self) -> list:
        return [self.ring.label(x) for x in sorted(self.elements)]

    def generator_labels(self) -> list:
        return [self.ring.label(x) for x in self.generators]

    def __repr__(self):
        return f"Ideal<{self.generator_labels()}>"


# construction ---------------------------------------------------------------

def residue(n: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Z/nZ with element i standing for the residue i."""
    if not isinstance(n, int) or n < 2:
        raise AlgebraError(f"residue modulus must be an integer >= 2, got {n!r}")
    if n > cap:
        raise CapExceeded(f"ring carrier {n} exceeds cap {cap}")
    r = np.arange(n)
    return FiniteRing(("residue", n), list(range(n)), (r[:, None] + r[None, :]) % n,
                      (r[:, None] * r[None, :]) % n, check=False, cap=cap)


def integer_scalars(e: int) -> FiniteRing:
    """Z/eZ standing in for Z acting on a finite group of exponent ``e``."""
    e = max(int(e), 2)
    r = np.arange(e)
    return FiniteRing(("integers", e), list(range(e)), (r[:, None] + r[None, :]) % e,
                      (r[:, None] * r[None, :]) % e, integer_lift=True, check=False,
                      cap=max(DEFAULT_CAP, e))


def product(r1: FiniteRing, r2: FiniteRing, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Direct product; element (a, b) has index a * |r2| + b."""
    n1, n2 = r1.size, r2.size
    if n1 * n2 > cap:
        raise CapExceeded(f"ring carrier {n1 * n2} exceeds cap {cap}")
    a1, a2 = np.divmod(np.arange(n1 * n2), n2)
    add = r1.add[np.ix_(a1, a1)] * n2 + r2.add[np.ix_(a2, a2)]
    mul = r1.mul[np.ix_(a1, a1)] * n2 + r2.mul[np.ix_(a2, a2)]
    labels = [(r1.labels[i], r2.labels[j]) for i, j in zip(a1, a2)]
    return FiniteRing(("product", r1.descriptor, r2.descriptor), labels, add, mul,
                      check=False, cap=cap, parts=(r1, r2))


def coset_map(add: np.ndarray, elements: Iterable[int]) -> tuple[np.ndarray, list[int]]:
    """Map each carrier element to its coset index (cosets ordered by least member)."""
    sub = np.array(sorted(int(x) for x in elements))
    n = add.shape[0]
    coset_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        coset_of[add[x, sub]] = len(reps)
        reps.append(x)
    return coset_of, reps


def quotient(ring: FiniteRing, ideal: "Ideal", cap: int = DEFAULT_CAP) -> FiniteRing:
    """R/I with cosets labelled by their least representative."""
    if ideal.ring is not ring:
        raise MismatchError("ideal belongs to a different ring")
    if not ideal.is_proper:
        raise AlgebraError("cannot take a quotient by the whole ring")
    coset_of, reps = coset_map(ring.add, ideal.elements)
    r = np.array(reps)
    add = coset_of[ring.add[np.ix_(r, r)]]
    mul = coset_of[ring.mul[np.ix_(r, r)]]
    labels = [ring.label(x) for x in reps]
    return FiniteRing(("quotient", ring.descriptor, ideal.generator_labels()), labels,
                      add, mul, check=False, cap=cap, parts=(ring, coset_of))


def build_ring(descriptor, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Rebuild a ring from its descriptor tuple."""
    kind = descriptor[0]
    if kind == "residue":
        return residue(descriptor[1], cap=cap)
    if kind == "integers":
        return integer_scalars(descriptor[1])
    if kind == "product":
        return product(build_ring(descriptor[1], cap), build_ring(descriptor[2], cap), cap=cap)
    if kind == "quotient":
        base = build_ring(descriptor[1], cap)
        ideal = ideal_span(base, [base.element(g) for g in descriptor[2]])
        return quotient(base, ideal, cap=cap)
    if kind == "idealize":
        from .finite_module import build_module, idealize
        module = build_module(descriptor[2])
        return idealize(module.ring, module)
    raise AlgebraError(f"unknown ring descriptor {descriptor!r}")


# ideal arithmetic ----------------------------------------------------------

def ideal_span(ring: FiniteRing, generators: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``generators``."""
    gens = []
    for g in generators:
        g = int(g)
        if not 0 <= g < ring.size:
            raise AlgebraError(f"element {g} is not in the carrier")
        if g not in gens:
            gens.append(g)
    elements = _closure.span(ring.add, ring.zero, [ring.principal(g) for g in gens])
    return ring.ideal_from_elements(elements.tolist(), generators=gens)


def _same_ring(I: Ideal, J: Ideal):
    if I.ring is not J.ring:
        raise MismatchError("ideals live in different rings")


def ideal_combine(I: Ideal, J: Ideal, kind: str) -> Ideal:
    """sum, product, intersection or colon (I:J) of two ideals."""
    _same_ring(I, J)
    R = I.ring
    if kind == "sum":
        return R.ideal_from_elements(_closure.subgroup_sum(R.add, I.array, J.array).tolist())
    if kind == "product":
        prods = np.unique(R.mul[np.ix_(I.array, J.array)])
        return ideal_span(R, prods.tolist())
    if kind == "intersection":
        return R.ideal_from_elements(I.elements & J.elements)
    if kind == "colon":
        # r in (I:J) iff r*j in I for every j in J
        ok = I.mask[R.mul[:, J.array]].all(axis=1)
        return R.ideal_from_elements(np.flatnonzero(ok).tolist())
    raise ValueError(f"unknown ideal combination {kind!r}")


def radical(I: Ideal) -> Ideal:
    """{r : r^n in I for some 1 <= n <= |R|}."""
    R = I.ring
    cur = np.arange(R.size)
    hit = I.mask[cur].copy()
    for _ in range(R.size - 1):
        cur = R.mul[cur, np.arange(R.size)]
        hit |= I.mask[cur]
    return R.ideal_from_elements(np.flatnonzero(hit).tolist())


# classification -----------------------------------------------------------

@dataclass
class IdealReport:
    ideal: Ideal
    proper: bool
    prime: bool
    maximal: bool
    primary: bool
    two_absorbing_primary: bool
    one_absorbing_primary: bool
    radical: Ideal
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("proper", "prime", "maximal", "primary", "two_absorbing_primary",
             "one_absorbing_primary")

    def flags(self) -> dict:
        return {f: getattr(self, f) for f in self.FLAGS}

    def to_json(self) -> dict:
        R = self.ideal.ring
        wit = {}
        for k, v in self.witnesses.items():
            wit[k] = None if v is None else [R.label(x) for x in v]
        return {
            "ideal": self.ideal.labels(),
            "generators": self.ideal.generator_labels(),
            "flags": self.flags(),
            "radical": self.radical.labels(),
            "witnesses": wit,
        }


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def one_absorbing_primary_witness(I: Ideal, rad: Optional[Ideal] = None):
    """First (a, b, c) of non-units with abc in I, ab not in I, c not in sqrt(I)."""
    R = I.ring
    rad = radical(I) if rad is None else rad
    nu = R.nonunits
    c_bad = ~rad.mask[nu]
    for a in nu:
        d = R.mul[a, nu]
        fail = (~I.mask[d])[:, None] & I.mask[R.mul[np.ix_(d, nu)]] & c_bad[None, :]
        hit = _first(fail)
        if hit is not None:
            return int(a), int(nu[hit[0]]), int(nu[hit[1]])
    return None


def classify_ideal(I: Ideal) -> IdealReport:
    """Decide every ideal flag by exhaustive quantification over the carrier."""
    R = I.ring
    I = R.ideal_from_elements(I.elements)
    rad = radical(I)
    if not I.is_proper:
        names = IdealReport.FLAGS[1:]
        return IdealReport(I, False, False, False, False, False, False, rad,
                           {k: None for k in names})
    inI, inR = I.mask, rad.mask
    prod_in = inI[R.mul]
    wit = {}
    wit["prime"] = _first(prod_in & ~inI[:, None] & ~inI[None, :])
    wit["primary"] = _first(prod_in & ~inI[:, None] & ~inR[None, :])
    wit["maximal"] = None
    for x in range(R.size):
        if x not in I.elements:
            bigger = ideal_combine(I, ideal_span(R, [x]), "sum")
            if bigger.is_proper:
                wit["maximal"] = (x,)
                break
    wit["one_absorbing_primary"] = one_absorbing_primary_witness(I, rad)
    wit["two_absorbing_primary"] = None
    rad_prod = inR[R.mul]
    for a in range(R.size):
        ab = R.mul[a]
        fail = (~inI[ab])[:, None] & inI[R.mul[ab]] & ~rad_prod[a][None, :] & ~rad_prod
        hit = _first(fail)
        if hit is not None:
            wit["two_absorbing_primary"] = (a, hit[0], hit[1])
            break
    return IdealReport(
        I, True,
        prime=wit["prime"] is None,
        maximal=wit["maximal"] is None,
        primary=wit["primary"] is None,
        two_absorbing_primary=wit["two_absorbing_primary"] is None,
        one_absorbing_primary=wit["one_absorbing_primary"] is None,
        radical=rad, witnesses=wit)


def is_prime_ideal(I: Ideal) -> bool:
    if not I.is_proper:
        return False
    R = I.ring
    inI = I.mask
    return not (inI[R.mul] & ~inI[:, None] & ~inI[None, :]).any()


def is_one_absorbing_primary_ideal(I: Ideal) -> bool:
    return I.is_proper and one_absorbing_primary_witness(I) is None


def associates(ring: FiniteRing, g: int) -> list[int]:
    """u*g for every unit u."""
    return sorted({int(ring.mul[u, g]) for u in ring.units})


def multiplicative_closure(ring: FiniteRing, seeds: Iterable[int]) -> frozenset:
    """Smallest multiplicatively closed set containing 1 and ``seeds``."""
    S = {ring.one}
    frontier = [int(s) for s in seeds]
    while frontier:
        x = frontier.pop()
        if x in S:
            continue
        S.add(x)
        for y in list(S):
            z = int(ring.mul[x, y])
            if z not in S:
                frontier.append(z)
    return frozenset(S)


def residue_units(n: int) -> list[int]:
    return [u for u in range(n) if gcd(u, n) == 1]

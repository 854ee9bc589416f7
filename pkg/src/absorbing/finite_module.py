"""Finite modules over finite rings (or over Z, for finite abelian groups).

A module stores its additive table and an action table ``act[r, m] = r.m``.
Over the integers the action factors through Z/e (e the group exponent), so
the scalar ring is ``integer_scalars(e)``; every residue class mod e holds a
non-unit integer, which is why that ring reports no units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import lcm
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import _closure
from .errors import AlgebraError, CapExceeded, MismatchError, NotMultiplicationError
from .finite_ring import (DEFAULT_CAP, FiniteRing, Ideal, coset_map,
                          integer_scalars, multiplicative_closure, product, radical,
                          is_prime_ideal)

LATTICE_CAP = 4096


class FiniteModule:
    """A finite unitary module; see the module docstring for the integer case."""

    def __init__(self, descriptor, ring: FiniteRing, labels, add, act, *, check=True,
                 cap=DEFAULT_CAP, parts=None):
        size = len(labels)
        if size > cap:
            raise CapExceeded(f"module carrier {size} exceeds cap {cap}")
        self.descriptor = descriptor
        self.ring = ring
        self.labels = list(labels)
        self.size = size
        self.add = np.asarray(add, dtype=np.int32)
        self.act = np.asarray(act, dtype=np.int32)
        self.parts = parts
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        row = np.arange(size)
        zeros = [z for z in range(size) if np.array_equal(self.add[z], row)]
        if not zeros:
            raise AlgebraError("module addition has no identity")
        self.zero = zeros[0]
        self.neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
        if self.act.shape != (ring.size, size):
            raise AlgebraError("action table has the wrong shape")
        if check:
            self._check_laws()
        self._sub_cache: dict[frozenset, Submodule] = {}
        self._submodules: Optional[list[Submodule]] = None
        self._prime: dict[frozenset, bool] = {}
        self._colon: dict[frozenset, Ideal] = {}
        self._mrad: dict[frozenset, Submodule] = {}
        self._reports: dict[frozenset, ClassificationReport] = {}
        self._multiplication: Optional[bool] = None

    @property
    def over_integers(self) -> bool:
        return self.ring.integer_lift

    def _check_laws(self):
        add, act, R = self.add, self.act, self.ring
        if not np.array_equal(add, add.T):
            raise AlgebraError("module addition is not commutative")
        if not (add[np.arange(self.size), self.neg] == self.zero).all():
            raise AlgebraError("module addition has no inverses")
        for a in range(self.size):
            if not np.array_equal(add[add[a]], add[a][add]):
                raise AlgebraError("module addition is not associative")
        if not np.array_equal(act[R.one], np.arange(self.size)):
            raise AlgebraError("identity scalar does not act as the identity")
        for r in range(R.size):
            # r(m + m') = rm + rm'
            if not np.array_equal(act[r][add], add[act[r][:, None], act[r][None, :]]):
                raise AlgebraError("action does not distribute over module addition")
            # (r + s)m = rm + sm  and  (rs)m = r(sm)
            if not np.array_equal(act[R.add[r]], add[act[r][None, :], act]):
                raise AlgebraError("action does not distribute over ring addition")
            if not np.array_equal(act[R.mul[r]], act[r][act]):
                raise AlgebraError("action is not associative")

    def __repr__(self):
        return f"FiniteModule({self.descriptor!r}, size={self.size})"

    # elements -----------------------------------------------------------

    def label(self, i: int):
        return self.labels[int(i)]

    def element(self, label) -> int:
        kind = self.descriptor[0]
        if kind == "regular":
            return self.ring.element(label)
        if kind in ("free", "group", "product", "sum"):
            if not isinstance(label, (tuple, list)):
                label = (label,)
            comps = self.parts
            if len(label) != len(comps):
                raise AlgebraError(f"{label!r} has the wrong number of coordinates")
            idx = 0
            for comp, x in zip(comps, label):
                idx = idx * comp.size + comp.element(x)
            return idx
        if kind == "quotient":
            parent, coset_of = self.parts
            return int(coset_of[parent.element(label)])
        if kind == "cyclic":
            return int(label) % self.size
        key = tuple(label) if isinstance(label, list) else label
        if key in self._index:
            return self._index[key]
        raise AlgebraError(f"{label!r} is not an element of {self.descriptor}")

    # submodules -----------------------------------------------------------

    def cyclic(self, m: int) -> np.ndarray:
        return np.unique(self.act[:, int(m)])

    def submodule_from_elements(self, elements, generators=None) -> "Submodule":
        key = frozenset(int(x) for x in elements)
        canonical = self._sub_cache.get(key)
        if canonical is None:
            gens = _closure.greedy_generators(self.add, self.zero, key, self.cyclic)
            canonical = self._sub_cache[key] = Submodule(self, key, gens)
        if generators is None:
            return canonical
        return Submodule(self, key, tuple(int(g) for g in generators))

    def whole(self) -> "Submodule":
        return self.submodule_from_elements(range(self.size))

    def zero_submodule(self) -> "Submodule":
        return self.submodule_from_elements([self.zero])

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return self.whole().generators

    def submodules(self, cap: int = LATTICE_CAP) -> list["Submodule"]:
        """Every submodule, ordered by size then by sorted elements."""
        if self._submodules is None:
            cyclics = [self.cyclic(m) for m in range(self.size)]
            lattice = _closure.subgroup_lattice(self.add, self.zero, cyclics, cap=cap)
            self._submodules = [self.submodule_from_elements(s) for s in lattice]
        return self._submodules

    def proper_submodules(self) -> list["Submodule"]:
        return [N for N in self.submodules() if N.is_proper]


@dataclass(frozen=True, eq=False)
class Submodule:
    module: FiniteModule
    elements: frozenset
    generators: tuple = ()

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.module.size, dtype=bool)
        m[list(self.elements)] = True
        return m

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(sorted(self.elements), dtype=np.int64)

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.module.size

    def __contains__(self, m) -> bool:
        return int(m) in self.elements

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Submodule) and other.module is self.module
                and other.elements == self.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: "Submodule") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Submodule") -> bool:
        return self.elements < other.elements

    def labels(self) -> list:
        return [self.module.label(x) for x in sorted(self.elements)]

    def generator_labels(self) -> list:
        return [self.module.label(x) for x in self.generators]

    def __repr__(self):
        return f"Submodule<{self.generator_labels()}>"


def span(module: FiniteModule, generators: Iterable[int]) -> Submodule:
    """Smallest submodule containing ``generators``."""
    gens = []
    for g in generators:
        g = int(g)
        if not 0 <= g < module.size:
            raise AlgebraError(f"element {g} is not in the module carrier")
        if g not in gens:
            gens.append(g)
    elements = _closure.span(module.add, module.zero, [module.cyclic(g) for g in gens])
    return module.submodule_from_elements(elements.tolist(), generators=gens)


def enumerate_submodules(module: FiniteModule, cap: int = LATTICE_CAP) -> list[Submodule]:
    return module.submodules(cap=cap)


def submodule_sum(N: Submodule, K: Submodule) -> Submodule:
    _same_module(N, K)
    M = N.module
    return M.submodule_from_elements(_closure.subgroup_sum(M.add, N.array, K.array).tolist())


def submodule_meet(*subs: Submodule) -> Submodule:
    M = subs[0].module
    return M.submodule_from_elements(reduce(frozenset.__and__, (s.elements for s in subs)))


def _same_module(N: Submodule, K: Submodule):
    if N.module is not K.module:
        raise MismatchError("submodules live in different modules")


# construction ---------------------------------------------------------------

def regular(ring: FiniteRing) -> FiniteModule:
    """R as a module over itself."""
    return FiniteModule(("regular", ring.descriptor), ring, ring.labels, ring.add, ring.mul,
                        check=False)


def _sum_tables(m1: FiniteModule, m2: FiniteModule):
    n2 = m2.size
    a1, a2 = np.divmod(np.arange(m1.size * n2), n2)
    add = m1.add[np.ix_(a1, a1)] * n2 + m2.add[np.ix_(a2, a2)]
    return a1, a2, add


def direct_sum(m1: FiniteModule, m2: FiniteModule, cap: int = DEFAULT_CAP) -> FiniteModule:
    """M1 (+) M2 over their common ring."""
    if m1.ring is not m2.ring:
        raise MismatchError("direct sum needs both summands over the same ring")
    if m1.size * m2.size > cap:
        raise CapExceeded(f"module carrier {m1.size * m2.size} exceeds cap {cap}")
    a1, a2, add = _sum_tables(m1, m2)
    act = m1.act[:, a1] * m2.size + m2.act[:, a2]
    comps = _components(m1) + _components(m2)
    labels = [_flat(m1.label(i)) + _flat(m2.label(j)) for i, j in zip(a1, a2)]
    return FiniteModule(("sum", m1.descriptor, m2.descriptor), m1.ring, labels, add, act,
                        check=False, cap=cap, parts=comps)


def _components(m: FiniteModule) -> tuple:
    if m.descriptor[0] in ("free", "group", "sum"):
        return tuple(m.parts)
    return (m,)


def _flat(label) -> tuple:
    return tuple(label) if isinstance(label, tuple) else (label,)


def free(ring: FiniteRing, k: int, cap: int = DEFAULT_CAP) -> FiniteModule:
    """R^k with coordinate tuples as labels (k = 2 over Z/2 is the Klein four-group)."""
    if k < 1:
        raise AlgebraError("free module rank must be >= 1")
    m = regular(ring)
    for _ in range(k - 1):
        m = direct_sum(m, regular(ring), cap=cap)
    if k == 1:
        return m
    return FiniteModule(("free", ring.descriptor, k), ring, m.labels, m.add, m.act,
                        check=False, cap=cap, parts=m.parts)


def cyclic_group(n: int, scalars: Optional[FiniteRing] = None) -> FiniteModule:
    """Z/n as a Z-module (scalars default to Z/n)."""
    if n < 1:
        raise AlgebraError("group order must be positive")
    R = scalars if scalars is not None else integer_scalars(n)
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    act = (np.arange(R.size)[:, None] * r[None, :]) % n
    return FiniteModule(("cyclic", n), R, list(range(n)), add, act, check=False)


def abelian_group(orders: Sequence[int], cap: int = DEFAULT_CAP) -> FiniteModule:
    """Z/n1 x ... x Z/nk as a module over the integers."""
    orders = [int(n) for n in orders]
    if not orders or any(n < 1 for n in orders):
        raise AlgebraError("group needs positive cyclic orders")
    e = reduce(lcm, orders)
    R = integer_scalars(e)
    comps = [cyclic_group(n, R) for n in orders]
    m = comps[0]
    for c in comps[1:]:
        m = direct_sum(m, c, cap=cap)
    if len(comps) == 1:
        return FiniteModule(("group", tuple(orders)), R, m.labels, m.add, m.act,
                            check=False, cap=cap, parts=(m,))
    return FiniteModule(("group", tuple(orders)), R, m.labels, m.add, m.act,
                        check=False, cap=cap, parts=tuple(comps))


def explicit(ring: FiniteRing, add, act, labels=None, cap: int = DEFAULT_CAP) -> FiniteModule:
    """Module from raw tables; every action law is verified."""
    add = np.asarray(add)
    labels = list(range(add.shape[0])) if labels is None else labels
    return FiniteModule(("explicit", ring.descriptor, add.shape[0]), ring, labels, add, act,
                        check=True, cap=cap)


def product_module(m1: FiniteModule, m2: FiniteModule, cap: int = DEFAULT_CAP) -> FiniteModule:
    """M1 x M2 over R1 x R2, acting coordinatewise."""
    if m1.over_integers or m2.over_integers:
        raise AlgebraError("product modules need finite base rings")
    ring = product(m1.ring, m2.ring, cap=max(cap, m1.ring.size * m2.ring.size))
    if m1.size * m2.size > cap:
        raise CapExceeded(f"module carrier {m1.size * m2.size} exceeds cap {cap}")
    a1, a2, add = _sum_tables(m1, m2)
    r1, r2 = np.divmod(np.arange(ring.size), m2.ring.size)
    act = m1.act[np.ix_(r1, a1)] * m2.size + m2.act[np.ix_(r2, a2)]
    labels = [(m1.label(i), m2.label(j)) for i, j in zip(a1, a2)]
    return FiniteModule(("product", m1.descriptor, m2.descriptor), ring, labels, add, act,
                        check=False, cap=cap, parts=(m1, m2))


def quotient_module(module: FiniteModule, N: "Submodule") -> tuple[FiniteModule, "ModuleHom"]:
    """M/N (cosets labelled by least representative) and the canonical projection."""
    if N.module is not module:
        raise MismatchError("submodule belongs to a different module")
    coset_of, reps = coset_map(module.add, N.elements)
    r = np.array(reps)
    add = coset_of[module.add[np.ix_(r, r)]]
    act = coset_of[module.act[:, r]]
    labels = [module.label(x) for x in reps]
    q = FiniteModule(("quotient", module.descriptor, N.generator_labels()), module.ring,
                     labels, add, act, check=False, parts=(module, coset_of))
    return q, ModuleHom(module, q, coset_of.astype(np.int64))


def submodule_as_module(N: Submodule) -> tuple[FiniteModule, "ModuleHom"]:
    """N as a module in its own right, with its inclusion into the parent."""
    M = N.module
    elems = N.array
    pos = {int(x): i for i, x in enumerate(elems)}
    lookup = np.vectorize(lambda x: pos[int(x)])
    add = lookup(M.add[np.ix_(elems, elems)])
    act = lookup(M.act[:, elems])
    labels = [M.label(x) for x in elems]
    sub = FiniteModule(("sub", M.descriptor, N.generator_labels()), M.ring, labels, add, act,
                       check=False)
    return sub, ModuleHom(sub, M, elems.copy())


def build_module(descriptor) -> FiniteModule:
    """Rebuild a module from its descriptor tuple (explicit tables excluded)."""
    from .finite_ring import build_ring
    kind = descriptor[0]
    if kind == "regular":
        return regular(build_ring(descriptor[1]))
    if kind == "free":
        return free(build_ring(descriptor[1]), descriptor[2])
    if kind == "group":
        return abelian_group(descriptor[1])
    if kind == "cyclic":
        return cyclic_group(descriptor[1])
    if kind == "sum":
        return direct_sum(build_module(descriptor[1]), build_module(descriptor[2]))
    if kind == "product":
        return product_module(build_module(descriptor[1]), build_module(descriptor[2]))
    if kind in ("quotient", "sub"):
        parent = build_module(descriptor[1])
        N = span(parent, [parent.element(g) for g in descriptor[2]])
        if kind == "quotient":
            return quotient_module(parent, N)[0]
        return submodule_as_module(N)[0]
    raise AlgebraError(f"cannot rebuild module from descriptor {descriptor!r}")


# colon ideals and radicals ------------------------------------------------

Target = Union[FiniteModule, Submodule, int]


def colon_into_ring(N: Submodule, X: Target) -> Ideal:
    """{r : rX subset N}; X is the whole module, a submodule, or one element."""
    M = N.module
    if isinstance(X, FiniteModule):
        if X is not M:
            raise MismatchError("colon target is a different module")
        key = N.elements
        if key in M._colon:
            return M._colon[key]
        gens = list(M.generators) or [M.zero]
    elif isinstance(X, Submodule):
        _same_module(N, X)
        gens = list(X.generators) or [M.zero]
        key = None
    else:
        gens = [int(X)]
        key = None
    ok = N.mask[M.act[:, gens]].all(axis=1)
    ideal = M.ring.ideal_from_elements(np.flatnonzero(ok).tolist())
    if key is not None:
        M._colon[key] = ideal
    return ideal


def annihilator(M: FiniteModule) -> Ideal:
    return colon_into_ring(M.zero_submodule(), M)


def is_faithful(M: FiniteModule) -> bool:
    """Zero annihilator; a finite module over Z is never faithful."""
    if M.over_integers:
        return False
    return len(annihilator(M)) == 1


def colon_in_module(N: Submodule, d: int) -> Submodule:
    """(N :_M d) = {m : dm in N}."""
    M = N.module
    return M.submodule_from_elements(np.flatnonzero(N.mask[M.act[int(d)]]).tolist())


def _prime_witness(N: Submodule, colon: Ideal):
    M = N.module
    fail = N.mask[M.act] & ~N.mask[None, :] & ~colon.mask[:, None]
    return _first(fail)


def is_prime_submodule(N: Submodule) -> bool:
    """am in N implies m in N or a in (N:M), for every scalar a and m."""
    M = N.module
    key = N.elements
    if key not in M._prime:
        M._prime[key] = N.is_proper and _prime_witness(N, colon_into_ring(N, M)) is None
    return M._prime[key]


def m_radical(N: Submodule) -> Submodule:
    """Intersection of the prime submodules containing N (M if there are none)."""
    M = N.module
    key = N.elements
    if key not in M._mrad:
        primes = [P for P in M.submodules() if N <= P and is_prime_submodule(P)]
        M._mrad[key] = submodule_meet(*primes) if primes else M.whole()
    return M._mrad[key]


# classification -----------------------------------------------------------

def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


@dataclass
class ClassificationReport:
    submodule: Submodule
    proper: bool
    prime: bool
    primary: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    one_absorbing_primary: bool
    p_one_absorbing_primary_for: Optional[Ideal]
    colon_ideal: Ideal
    colon_radical: Ideal
    m_radical: Submodule
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("proper", "prime", "primary", "two_absorbing", "two_absorbing_primary",
             "one_absorbing_primary")
    # witness layout per flag: which coordinates are scalars vs module elements
    LAYOUT = {"prime": "sm", "primary": "sm", "two_absorbing": "ssm",
              "two_absorbing_primary": "ssm", "one_absorbing_primary": "ssm"}

    def flags(self) -> dict:
        return {f: getattr(self, f) for f in self.FLAGS}

    def to_json(self) -> dict:
        M = self.submodule.module
        R = M.ring
        wit = {}
        for k, v in self.witnesses.items():
            if v is None:
                wit[k] = None
            else:
                wit[k] = [R.label(x) if kind == "s" else M.label(x)
                          for kind, x in zip(self.LAYOUT[k], v)]
        P = self.p_one_absorbing_primary_for
        return {
            "submodule": self.submodule.labels(),
            "generators": self.submodule.generator_labels(),
            "flags": self.flags(),
            "p_one_absorbing_primary_for": None if P is None else P.generator_labels(),
            "colon_ideal": self.colon_ideal.generator_labels(),
            "colon_radical": self.colon_radical.generator_labels(),
            "m_radical": self.m_radical.generator_labels(),
            "witnesses": wit,
        }


def one_absorbing_primary_witness(N: Submodule, colon: Ideal, mrad: Submodule):
    """First (a, b, m), a and b non-units, with abm in N, ab not in (N:M), m not in M-rad(N)."""
    M = N.module
    R = M.ring
    nu = R.nonunits
    for a in nu:
        d = R.mul[a, nu]
        fail = (~colon.mask[d])[:, None] & N.mask[M.act[d]] & ~mrad.mask[None, :]
        hit = _first(fail)
        if hit is not None:
            return int(a), int(nu[hit[0]]), hit[1]
    return None


def _two_absorbing_witness(N: Submodule, colon: Ideal, target: Submodule):
    """First (a, b, m) with abm in N, ab not in (N:M), am and bm outside ``target``."""
    M = N.module
    R = M.ring
    in_t = target.mask[M.act]
    for a in range(R.size):
        d = R.mul[a]
        fail = ((~colon.mask[d])[:, None] & N.mask[M.act[d]]
                & ~in_t[a][None, :] & ~in_t)
        hit = _first(fail)
        if hit is not None:
            return a, hit[0], hit[1]
    return None


def classify_submodule(N: Submodule) -> ClassificationReport:
    """Decide every submodule flag by exhaustive quantification."""
    M = N.module
    key = N.elements
    if key in M._reports:
        return M._reports[key]
    N = M.submodule_from_elements(key)     # canonical generators keep reports stable
    colon = colon_into_ring(N, M)
    crad = radical(colon)
    mrad = m_radical(N)
    if not N.is_proper:
        report = ClassificationReport(N, False, False, False, False, False, False, None,
                                      colon, crad, mrad,
                                      {k: None for k in ClassificationReport.LAYOUT})
        M._reports[key] = report
        return report
    wit = {}
    wit["prime"] = _prime_witness(N, colon)
    fail = N.mask[M.act] & ~N.mask[None, :] & ~crad.mask[:, None]
    wit["primary"] = _first(fail)
    wit["two_absorbing"] = _two_absorbing_witness(N, colon, N)
    wit["two_absorbing_primary"] = _two_absorbing_witness(N, colon, mrad)
    wit["one_absorbing_primary"] = one_absorbing_primary_witness(N, colon, mrad)
    one_ap = wit["one_absorbing_primary"] is None
    P = crad if one_ap and is_prime_ideal(crad) else None
    report = ClassificationReport(
        N, True,
        prime=wit["prime"] is None,
        primary=wit["primary"] is None,
        two_absorbing=wit["two_absorbing"] is None,
        two_absorbing_primary=wit["two_absorbing_primary"] is None,
        one_absorbing_primary=one_ap,
        p_one_absorbing_primary_for=P,
        colon_ideal=colon, colon_radical=crad, m_radical=mrad, witnesses=wit)
    M._reports[key] = report
    return report


def is_one_absorbing_primary(N: Submodule) -> bool:
    return classify_submodule(N).one_absorbing_primary


# multiplication modules -----------------------------------------------------

def ideal_times(I: Ideal, X: Union[FiniteModule, Submodule]) -> Submodule:
    """IX: the submodule spanned by r.x for r in I and x in X."""
    if isinstance(X, Submodule):
        M, xs = X.module, list(X.generators) or [X.module.zero]
    else:
        M, xs = X, list(X.generators) or [X.zero]
    if I.ring is not M.ring:
        raise MismatchError("ideal and module use different rings")
    gens = np.unique(M.act[np.ix_(list(I.generators) or [M.ring.zero], xs)])
    return span(M, gens.tolist())


def is_multiplication(M: FiniteModule) -> bool:
    """Every submodule N equals (N:M)M."""
    if M._multiplication is None:
        M._multiplication = all(ideal_times(colon_into_ring(N, M), M) == N
                                for N in M.submodules())
    return M._multiplication


def submodule_product(N: Submodule, K: Submodule) -> Submodule:
    """NK = (N:M)(K:M)M on a multiplication module."""
    _same_module(N, K)
    M = N.module
    if not is_multiplication(M):
        raise NotMultiplicationError("submodule product needs a multiplication module")
    from .finite_ring import ideal_combine
    I = ideal_combine(colon_into_ring(N, M), colon_into_ring(K, M), "product")
    return ideal_times(I, M)


# homomorphisms ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ModuleHom:
    """A linear map given by its full table ``table[m] = f(m)``."""

    source: FiniteModule
    target: FiniteModule
    table: np.ndarray

    @property
    def generator_images(self) -> tuple:
        return tuple(int(self.table[g]) for g in self.source.generators)

    def __call__(self, m: int) -> int:
        return int(self.table[int(m)])

    def is_surjective(self) -> bool:
        return len(np.unique(self.table)) == self.target.size

    def kernel(self) -> Submodule:
        return self.source.submodule_from_elements(
            np.flatnonzero(self.table == self.target.zero).tolist())

    def image(self, X: Optional[Submodule] = None) -> Submodule:
        elems = self.table if X is None else self.table[X.array]
        return self.target.submodule_from_elements(np.unique(elems).tolist())

    def preimage(self, Y: Submodule) -> Submodule:
        return self.source.submodule_from_elements(np.flatnonzero(Y.mask[self.table]).tolist())


def hom_from_generators(source: FiniteModule, target: FiniteModule,
                        images: Sequence[int], generators: Optional[Sequence[int]] = None
                        ) -> ModuleHom:
    """Extend generator images linearly; raises if the assignment is not well defined."""
    if source.ring is not target.ring and source.ring.descriptor != target.ring.descriptor:
        raise MismatchError("homomorphism needs a common base ring")
    gens = list(source.generators if generators is None else generators)
    if len(gens) != len(images):
        raise AlgebraError("one image per generator is required")
    table = np.full(source.size, -1, dtype=np.int64)
    table[source.zero] = target.zero
    known = [source.zero]
    for g, h in zip(gens, images):
        g, h = int(g), int(h)
        # every element of the span so far is x + r.g for known x
        new_known = []
        for x in known:
            for r in range(source.ring.size):
                s = int(source.add[x, source.act[r, g]])
                v = int(target.add[table[x], target.act[r, h]])
                if table[s] < 0:
                    table[s] = v
                    new_known.append(s)
                elif table[s] != v:
                    raise AlgebraError("generator images do not define a homomorphism")
        known = known + new_known
    if (table < 0).any():
        raise AlgebraError("generators do not span the source module")
    _check_linear(source, target, table)
    return ModuleHom(source, target, table)


def _check_linear(source, target, table):
    lhs = table[source.add]
    rhs = target.add[table[:, None], table[None, :]]
    if not np.array_equal(lhs, rhs):
        raise AlgebraError("map is not additive")
    if not np.array_equal(table[source.act], target.act[:, table]):
        raise AlgebraError("map does not commute with scalars")


def scalar_map(M: FiniteModule, r: int) -> ModuleHom:
    """m -> r.m."""
    return ModuleHom(M, M, M.act[int(r)].astype(np.int64))


def identity_map(M: FiniteModule) -> ModuleHom:
    return ModuleHom(M, M, np.arange(M.size))


def hom_transfer(f: ModuleHom, direction: str, X: Submodule, *, require_epi=False) -> Submodule:
    """Image or preimage of a submodule under ``f``."""
    if direction == "image":
        if X.module is not f.source:
            raise MismatchError("submodule is not in the source module")
        if require_epi and not f.is_surjective():
            raise AlgebraError("image transfer law needs an epimorphism")
        return f.image(X)
    if direction == "preimage":
        if X.module is not f.target:
            raise MismatchError("submodule is not in the target module")
        return f.preimage(X)
    raise ValueError(f"unknown direction {direction!r}")


# localization -----------------------------------------------------------------

@dataclass
class Localization:
    ring: FiniteRing
    module: FiniteModule
    ring_map: np.ndarray
    module_map: np.ndarray
    S: frozenset
    base: FiniteModule

    def of_submodule(self, N: Submodule) -> Submodule:
        """S^-1 N = {n/s}; scaling by 1/s never leaves the image of N/1."""
        return self.module.submodule_from_elements(np.unique(self.module_map[N.array]).tolist())


def _fraction_keys(ring: FiniteRing, S: Sequence[int], add, act, zero, size):
    """Class key of (x, s) for x in a carrier with ring action ``act``.

    x/s = x'/s' iff t(s'x - sx') = 0 for some t in S.  With D the product of
    all of S, D is a multiple of every t in S, so the test reduces to
    D(s'x - sx') = 0.  Writing x/s = (w_s x)/D with w_s = D/s (the product of
    the other members of S), two fractions agree iff D^2 kills the difference
    of their numerators over D.
    """
    D = ring.one
    for s in S:
        D = int(ring.mul[D, s])
    D2 = int(ring.mul[D, D])
    w = {}
    for s in S:
        acc = ring.one
        for t in S:
            if t != s:
                acc = int(ring.mul[acc, t])
        w[s] = acc
    killed = np.flatnonzero(act[D2] == zero)
    coset_of, reps = coset_map(add, killed.tolist())

    def key(x: int, s: int) -> int:
        return int(coset_of[act[w[s], x]])

    return key, len(reps)


def localize(M: FiniteModule, S: Iterable[int]) -> Localization:
    """S^-1 R and S^-1 M as formal fractions, with the canonical maps."""
    R = M.ring
    if R.integer_lift:
        raise AlgebraError("localization needs a finite base ring")
    S = sorted({int(s) for s in S})
    if R.one not in S:
        raise AlgebraError("S must contain 1")
    if multiplicative_closure(R, S) != frozenset(S):
        raise AlgebraError("S is not multiplicatively closed")
    rkey, _ = _fraction_keys(R, S, R.add, R.mul, R.zero, R.size)
    mkey, _ = _fraction_keys(R, S, M.add, M.act, M.zero, M.size)

    def carrier(key, size, label):
        index = {}
        reps = []
        for s in S:
            for x in range(size):
                k = key(x, s)
                if k not in index:
                    index[k] = len(reps)
                    reps.append((x, s))
        return index, reps

    r_index, r_reps = carrier(rkey, R.size, R.label)
    m_index, m_reps = carrier(mkey, M.size, M.label)
    nr, nm = len(r_reps), len(m_reps)
    if nr < 2:
        raise AlgebraError("localization is the zero ring")
    radd = np.empty((nr, nr), dtype=np.int64)
    rmul = np.empty((nr, nr), dtype=np.int64)
    for i, (x, s) in enumerate(r_reps):
        for j, (y, t) in enumerate(r_reps):
            st = int(R.mul[s, t])
            num = int(R.add[R.mul[x, t], R.mul[y, s]])
            radd[i, j] = r_index[rkey(num, st)]
            rmul[i, j] = r_index[rkey(int(R.mul[x, y]), st)]
    madd = np.empty((nm, nm), dtype=np.int64)
    mact = np.empty((nr, nm), dtype=np.int64)
    for i, (x, s) in enumerate(m_reps):
        for j, (y, t) in enumerate(m_reps):
            num = int(M.add[M.act[t, x], M.act[s, y]])
            madd[i, j] = m_index[mkey(num, int(R.mul[s, t]))]
    for i, (r, s) in enumerate(r_reps):
        for j, (x, t) in enumerate(m_reps):
            mact[i, j] = m_index[mkey(int(M.act[r, x]), int(R.mul[s, t]))]
    s_labels = [R.label(s) for s in S]
    ring = FiniteRing(("localize", R.descriptor, s_labels),
                      [f"{R.label(x)}/{R.label(s)}" for x, s in r_reps], radd, rmul,
                      check=True)
    module = FiniteModule(("localize", M.descriptor, s_labels), ring,
                          [f"{M.label(x)}/{R.label(s)}" for x, s in m_reps], madd, mact,
                          check=True)
    one = R.one
    ring_map = np.array([r_index[rkey(x, one)] for x in range(R.size)])
    module_map = np.array([m_index[mkey(x, one)] for x in range(M.size)])
    return Localization(ring, module, ring_map, module_map, frozenset(S), M)


# idealization ------------------------------------------------------------------

def idealize(R: FiniteRing, M: FiniteModule, cap: int = DEFAULT_CAP) -> FiniteRing:
    """R(+)M on pairs (a, m) with (a, m1)(b, m2) = (ab, a.m2 + b.m1)."""
    if M.ring is not R:
        raise MismatchError("module is not over the given ring")
    n = R.size * M.size
    if n > cap:
        raise CapExceeded(f"idealization carrier {n} exceeds cap {cap}")
    ri, mi = np.divmod(np.arange(n), M.size)
    add = R.add[np.ix_(ri, ri)] * M.size + M.add[np.ix_(mi, mi)]
    cross = M.add[M.act[np.ix_(ri, mi)].T, M.act[np.ix_(ri, mi)]]
    # cross[i, j] = a_i . m_j + a_j . m_i
    mul = R.mul[np.ix_(ri, ri)] * M.size + cross
    labels = [(R.label(a), M.label(m)) for a, m in zip(ri, mi)]
    return FiniteRing(("idealize", R.descriptor, M.descriptor), labels, add, mul,
                      check=False, cap=cap, parts=(R, M))


def homogeneous_ideal(ring: FiniteRing, I: Ideal, N: Submodule) -> Ideal:
    """I(+)N inside an idealization ring; needs IM subset N."""
    R, M = ring.parts
    if I.ring is not R or N.module is not M:
        raise MismatchError("I and N must come from the idealized ring and module")
    if not ideal_times(I, M) <= N:
        raise AlgebraError("IM is not contained in N")
    elems = [a * M.size + m for a in sorted(I.elements) for m in sorted(N.elements)]
    return ring.ideal_from_elements(elems)

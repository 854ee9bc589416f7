"""Named, deterministic instance corpora for the law catalog.

Every corpus is rebuilt from its name and seed alone, so worker processes can
regenerate it and address instances by index.  Enumeration order is fixed:
modules in construction order, then submodules in lattice order (size, then
sorted elements).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from ..errors import AlgebraError
from ..finite_module import (FiniteModule, abelian_group, free, idealize, localize,
                             product_module, quotient_module, regular, scalar_map,
                             submodule_as_module)
from ..finite_ring import multiplicative_closure, residue
from ..integer_module import lattice
from .covering import Covering

KINDS = ("submodule", "module", "ideal", "hom", "covering", "quotient", "product",
         "localization", "idealization", "int_ideal", "int_lattice", "fixture")


@dataclass(frozen=True)
class Instance:
    kind: str
    payload: Any
    tag: str


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    residues: tuple            # n for regular(residue(n))
    products: tuple            # (a, b) for regular(Z/a) x regular(Z/b)
    quotient_of: tuple         # n whose regular module is quotiented by every submodule
    groups: tuple              # finite abelian groups as Z-modules
    extras: bool               # Klein four, idealization rings, products with them
    covering_full: tuple       # n with exhaustive covering search
    covering_extra: bool       # coverings in the extra multiplication modules
    hom_limit: int             # modules up to this size contribute homomorphisms
    localize_limit: int
    idealize_limit: int
    int_ideal_max: int
    lattice_count: int


SPECS = {
    "small-finite": CorpusSpec(
        "small-finite", residues=tuple(range(2, 31)),
        products=((2, 2), (2, 3), (2, 5), (3, 3), (3, 5), (5, 5), (4, 2), (4, 3)),
        quotient_of=(8, 12, 18, 24), groups=((2, 2), (2, 4), (4,), (6,), (2, 6)),
        extras=True, covering_full=(12, 30, 36), covering_extra=True,
        hom_limit=24, localize_limit=30, idealize_limit=8,
        int_ideal_max=200, lattice_count=24),
    "zn-60": CorpusSpec(
        "zn-60", residues=tuple(range(2, 61)),
        products=((2, 2), (2, 3), (2, 5), (3, 3), (3, 5), (5, 5), (4, 3), (4, 5)),
        quotient_of=(12, 24, 36, 60), groups=(),
        extras=False, covering_full=(12, 30, 36), covering_extra=False,
        hom_limit=36, localize_limit=60, idealize_limit=12,
        int_ideal_max=100, lattice_count=16),
    "coverings": CorpusSpec(
        "coverings", residues=(12, 30, 36), products=(), quotient_of=(), groups=(),
        extras=True, covering_full=(12, 30, 36), covering_extra=True,
        hom_limit=0, localize_limit=0, idealize_limit=0, int_ideal_max=0, lattice_count=0),
    "z-world": CorpusSpec(
        "z-world", residues=(), products=(), quotient_of=(), groups=(), extras=False,
        covering_full=(), covering_extra=False, hom_limit=0, localize_limit=0,
        idealize_limit=0, int_ideal_max=1000, lattice_count=120),
}

# bounded subset size for coverings outside the exhaustive residue searches
COVER_MAX_MEMBERS = 4


def corpus_names() -> list[str]:
    return list(SPECS)


def shipped_lattices(count: int, seed: int) -> list:
    """Seeded sublattices of Z^2 with entries in [-32, 32] and a small torsion exponent.

    The family p^n Z x 0 and a few hand-picked lattices lead the list; random
    ones are kept when their torsion exponent is at most 64, which keeps the
    brute-force refutation cheap.
    """
    from ..integer_module import torsion_exponent
    fixed = [lattice([(p ** n, 0)], 2) for p in (2, 3) for n in range(1, 5)]
    fixed += [lattice([(2, 0), (0, 3)], 2), lattice([(6, 0), (0, 1)], 2),
              lattice([(12, 0)], 2), lattice([(2, 2), (0, 4)], 2), lattice([], 2),
              lattice([(1, 0), (0, 1)], 2), lattice([(1, 1)], 2), lattice([(4, 6)], 2)]
    rng = random.Random(seed)
    out = list(fixed)
    seen = {L.basis for L in out}
    while len(out) < count:
        ngens = rng.choice((1, 2, 2, 3))
        gens = [(rng.randint(-32, 32), rng.randint(-32, 32)) for _ in range(ngens)]
        L = lattice(gens, 2)
        if L.basis in seen or not L.is_proper() or torsion_exponent(L) > 64:
            continue
        seen.add(L.basis)
        out.append(L)
    return out[:count]


class Corpus:
    """Lazily materialised instance lists, one per kind."""

    def __init__(self, name: str = "small-finite", seed: int = 0):
        if name not in SPECS:
            raise KeyError(f"unknown corpus {name!r}; known: {', '.join(SPECS)}")
        self.name = name
        self.seed = seed
        self.spec = SPECS[name]
        self._modules = None
        self._cache: dict[str, list[Instance]] = {}

    # modules -----------------------------------------------------------------

    def modules(self) -> list[tuple[str, FiniteModule]]:
        if self._modules is None:
            self._modules = self._build_modules()
        return self._modules

    def _build_modules(self):
        s = self.spec
        out = []
        rings = {}

        def zn(n):
            if n not in rings:
                rings[n] = residue(n)
            return rings[n]

        for n in s.residues:
            out.append((f"regular(Z/{n})", regular(zn(n))))
        for a, b in s.products:
            out.append((f"regular(Z/{a}) x regular(Z/{b})",
                        product_module(regular(residue(a)), regular(residue(b)))))
        for n in s.quotient_of:
            M = regular(zn(n))
            for N in M.submodules()[1:-1]:
                Q, _ = quotient_module(M, N)
                out.append((f"regular(Z/{n})/<{N.generator_labels()[0]}>", Q))
        for orders in s.groups:
            out.append((f"group{orders}", abelian_group(orders)))
        if s.extras:
            for tag, M in extra_modules():
                out.append((tag, M))
        return out

    # instance lists ------------------------------------------------------------

    def instances(self, kind: str) -> list[Instance]:
        if kind not in KINDS:
            raise KeyError(f"unknown instance kind {kind!r}")
        if kind not in self._cache:
            self._cache[kind] = list(getattr(self, "_gen_" + kind)())
        return self._cache[kind]

    def _gen_module(self):
        for tag, M in self.modules():
            yield Instance("module", M, tag)

    def _gen_submodule(self):
        for tag, M in self.modules():
            for N in M.submodules():
                yield Instance("submodule", N, f"{tag} :: {N.generator_labels()}")

    def _gen_ideal(self):
        for tag, M in self.modules():
            if M.descriptor[0] == "regular":
                for I in M.ring.ideals():
                    yield Instance("ideal", I, f"{tag} :: ideal {I.generator_labels()}")

    def _gen_hom(self):
        """Projections onto every quotient, scalar maps, and inclusions of submodules."""
        for tag, M in self.modules():
            if M.size > self.spec.hom_limit:
                continue
            for N in M.submodules():
                _, pi = quotient_module(M, N)
                yield Instance("hom", pi, f"{tag} -> /{N.generator_labels()}")
            for r in range(M.ring.size):
                if M.over_integers and r == 0:
                    continue
                yield Instance("hom", scalar_map(M, r), f"{tag} * {M.ring.label(r)}")
            for N in M.submodules()[1:-1]:
                _, inc = submodule_as_module(N)
                yield Instance("hom", inc, f"{N.generator_labels()} -> {tag}")

    def _gen_quotient(self):
        for tag, M in self.modules():
            if M.size > self.spec.hom_limit:
                continue
            for N2 in M.submodules():
                for N1 in M.submodules():
                    if N2 <= N1:
                        yield Instance("quotient", (M, N1, N2),
                                       f"{tag} :: {N1.generator_labels()} / {N2.generator_labels()}")

    def _gen_product(self):
        for tag, M in self.modules():
            if M.descriptor[0] == "product":
                yield Instance("product", M, tag)

    def _gen_localization(self):
        """S generated by one element, for every element of a finite base ring."""
        for tag, M in self.modules():
            R = M.ring
            if R.integer_lift or M.size > self.spec.localize_limit:
                continue
            seen = set()
            for s in range(R.size):
                S = multiplicative_closure(R, [s])
                if S in seen:
                    continue
                seen.add(S)
                try:
                    loc = localize(M, S)
                except AlgebraError:
                    continue          # S contains 0: the zero ring
                yield Instance("localization", loc, f"{tag} at <{R.label(s)}>")

    def _gen_idealization(self):
        lim = self.spec.idealize_limit
        for n in range(2, lim + 1):
            R = residue(n)
            M = regular(R)
            yield Instance("idealization", (R, M, idealize(R, M)), f"Z/{n}(+)Z/{n}")
            for N in M.submodules()[1:-1]:
                Q, _ = quotient_module(M, N)
                yield Instance("idealization", (R, Q, idealize(R, Q)),
                               f"Z/{n}(+)Z/{n}/<{N.generator_labels()[0]}>")
        if self.spec.extras:
            R = residue(2)
            V = free(R, 2)
            yield Instance("idealization", (R, V, idealize(R, V)), "Z/2(+)(Z/2)^2")

    def _gen_covering(self):
        s = self.spec
        sources = [(f"regular(Z/{n})", regular(residue(n)), None) for n in s.covering_full]
        if s.covering_extra:
            sources += [(tag, M, COVER_MAX_MEMBERS) for tag, M in extra_modules()]
        if s.covering_full:
            for n in (12, 36):
                M = regular(residue(n))
                for N in M.submodules()[1:-1]:
                    Q, _ = quotient_module(M, N)
                    sources.append((f"regular(Z/{n})/<{N.generator_labels()[0]}>", Q, None))
        for tag, M, max_members in sources:
            for C in enumerate_coverings(M, max_members):
                yield Instance("covering", C, f"{tag} :: {C.describe()}")

    def _gen_int_ideal(self):
        for n in range(0, self.spec.int_ideal_max + 1):
            if n != 1:
                yield Instance("int_ideal", n, f"{n}Z")

    def _gen_int_lattice(self):
        for L in shipped_lattices(self.spec.lattice_count, self.seed):
            yield Instance("int_lattice", L, repr(L))

    def _gen_fixture(self):
        yield Instance("fixture", "intersection-non-example", "2Z, 3Z and 6Z in Z")


def extra_modules() -> list[tuple[str, FiniteModule]]:
    """Klein four and the regular modules of small rings with non-principal ideals."""
    F2 = residue(2)
    A = idealize(F2, free(F2, 2))               # F2[x,y]/(x,y)^2
    B = idealize(F2, regular(F2))               # F2[x]/(x^2)
    F3 = residue(3)
    C3 = idealize(F3, regular(F3))
    out = [("(Z/2)^2", free(F2, 2)),
           ("(Z/4)^2", free(residue(4), 2)),
           ("regular(Z/2(+)(Z/2)^2)", regular(A)),
           ("regular(Z/2(+)Z/2)", regular(B)),
           ("regular(Z/3(+)Z/3)", regular(C3)),
           ("regular(Z/2(+)(Z/2)^2) x regular(Z/2)",
            product_module(regular(A), regular(residue(2)))),
           ("regular(Z/2(+)(Z/2)^2) x regular(Z/3)",
            product_module(regular(A), regular(residue(3)))),
           ("regular(Z/2(+)Z/2) x regular(Z/3)",
            product_module(regular(B), regular(residue(3))))]
    return out


def enumerate_coverings(M: FiniteModule, max_members=None):
    """Every (target, distinct proper members) with the members covering the target.

    Targets run over all submodules, member sets over subsets of proper
    submodules of size 2 up to ``max_members`` (all sizes when None).
    Members that already contain the target are allowed.
    """
    subs = M.submodules()
    proper = [N for N in subs if N.is_proper]
    top = len(proper) if max_members is None else min(max_members, len(proper))
    for T in subs:
        for r in range(2, top + 1):
            for members in combinations(proper, r):
                union = frozenset().union(*(N.elements for N in members))
                if T.elements <= union:
                    yield Covering(T, members)

"""Coverings of a submodule by finitely many submodules, and the avoidance checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional

from ..errors import AlgebraError, MismatchError, NotMultiplicationError
from ..finite_module import (FiniteModule, Submodule, classify_submodule, colon_into_ring,
                             is_multiplication, m_radical)
from ..finite_ring import Ideal, ideal_combine, ideal_span, radical


@dataclass(frozen=True, eq=False)
class Covering:
    target: Submodule
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise AlgebraError("a covering needs at least one member")
        M = self.target.module
        for N in self.members:
            if N.module is not M:
                raise MismatchError("covering members live in another module")
            if not N.is_proper:
                raise AlgebraError("covering members must be proper submodules")

    @property
    def module(self) -> FiniteModule:
        return self.target.module

    @property
    def n(self) -> int:
        return len(self.members)

    def union(self, skip: Optional[int] = None) -> frozenset:
        parts = [N.elements for i, N in enumerate(self.members) if i != skip]
        return reduce(frozenset.__or__, parts, frozenset())

    def covers(self) -> bool:
        return self.target.elements <= self.union()

    def describe(self) -> dict:
        return {"target": self.target.generator_labels(),
                "members": [N.generator_labels() for N in self.members]}


def is_efficient(C: Covering) -> bool:
    """True iff dropping any single member stops the union from covering the target."""
    if not C.covers():
        raise AlgebraError("members do not cover the target")
    T = C.target.elements
    return all(not T <= C.union(skip=i) for i in range(C.n))


def reduce_to_efficient(C: Covering) -> Covering:
    """Greedy deletion in ascending index order.

    A member is dropped when the remaining ones reach the same part of the
    target.  A member kept at its turn stays necessary after later deletions
    (the union only shrinks), so one pass suffices.
    """
    T = C.target.elements
    keep = list(C.members)
    i = 0
    while i < len(keep):
        if len(keep) == 1:
            break
        rest = reduce(frozenset.__or__, (N.elements for j, N in enumerate(keep) if j != i),
                      frozenset())
        full = rest | keep[i].elements
        if T & rest == T & full:
            del keep[i]
        else:
            i += 1
    return Covering(C.target, tuple(keep))


# radical non-containment hypothesis -----------------------------------------

class _RadicalCache:
    """sqrt((N:M)), M-rad(N) and sqrt((N:m)) per submodule of one module."""

    def __init__(self, M: FiniteModule):
        self.M = M
        self._elem: dict = {}

    def colon_radical(self, N: Submodule) -> Ideal:
        return classify_submodule(N).colon_radical

    def element_radical(self, N: Submodule, m: int) -> Ideal:
        key = (N.elements, m)
        if key not in self._elem:
            self._elem[key] = radical(colon_into_ring(N, m))
        return self._elem[key]


_caches: dict[int, _RadicalCache] = {}


def _cache(M: FiniteModule) -> _RadicalCache:
    c = _caches.get(id(M))
    if c is None or c.M is not M:
        c = _caches[id(M)] = _RadicalCache(M)
    return c


def radical_condition_witness(C: Covering):
    """First (i, j, m) with sqrt((N_i:M)) inside sqrt((N_j:m)), m outside M-rad(N_j)."""
    cache = _cache(C.module)
    for j, Nj in enumerate(C.members):
        outside = [m for m in range(C.module.size) if m not in m_radical(Nj)]
        for i, Ni in enumerate(C.members):
            if i == j:
                continue
            ri = cache.colon_radical(Ni)
            for m in outside:
                if ri <= cache.element_radical(Nj, m):
                    return i, j, m
    return None


@dataclass
class AvoidanceVerdict:
    hypothesis_holds: bool
    conclusion_holds: bool
    witness: Optional[dict]


def _require_multiplication(M: FiniteModule, strict: bool):
    if strict and not is_multiplication(M):
        raise NotMultiplicationError("avoidance needs a finitely generated multiplication module")


def avoidance_check(C: Covering, strict: bool = True) -> AvoidanceVerdict:
    """At most two non-1AP members, a covering, and the radical condition give N inside some N_k.

    With ``strict`` a non-multiplication module is rejected; otherwise the
    hypothesis is evaluated anyway (finite modules are finitely generated).
    """
    _require_multiplication(C.module, strict)
    non_1ap = [i for i, N in enumerate(C.members) if not classify_submodule(N).one_absorbing_primary]
    inside = next((k for k, N in enumerate(C.members) if C.target <= N), None)
    conclusion = inside is not None
    if not C.covers():
        return AvoidanceVerdict(False, conclusion, {"reason": "not a covering"})
    if len(non_1ap) > 2:
        return AvoidanceVerdict(False, conclusion, {"reason": "more than two non-1AP members",
                                                    "members": non_1ap})
    bad = radical_condition_witness(C)
    if bad is not None:
        i, j, m = bad
        return AvoidanceVerdict(False, conclusion, {"reason": "radical containment", "i": i,
                                                    "j": j, "m": C.module.label(m)})
    return AvoidanceVerdict(True, conclusion, {"contained_in": inside})


def efficient_check(C: Covering, strict: bool = True) -> AvoidanceVerdict:
    """Efficient covering, n > 2 and the radical condition leave no member 1-absorbing primary."""
    _require_multiplication(C.module, strict)
    one_ap = [i for i, N in enumerate(C.members) if classify_submodule(N).one_absorbing_primary]
    conclusion = not one_ap
    if C.n <= 2 or not C.covers() or not is_efficient(C):
        return AvoidanceVerdict(False, conclusion, {"reason": "not an efficient covering with n > 2"})
    bad = radical_condition_witness(C)
    if bad is not None:
        i, j, m = bad
        return AvoidanceVerdict(False, conclusion, {"reason": "radical containment", "i": i,
                                                    "j": j, "m": C.module.label(m)})
    return AvoidanceVerdict(True, conclusion, {"one_absorbing_primary_members": one_ap})


def covering_tools(C: Covering, kind: str):
    if kind == "is_efficient":
        return is_efficient(C)
    if kind == "reduce_to_efficient":
        return reduce_to_efficient(C)
    raise ValueError(f"unknown covering tool {kind!r}")


# the ring form: ideals covering an ideal --------------------------------------

def ring_radical_condition_witness(members: list[Ideal]):
    """First (i, j, x): sqrt(I_i) inside sqrt((I_j : x)) with x outside sqrt(I_j)."""
    R = members[0].ring
    rads = [radical(I) for I in members]
    for j, Ij in enumerate(members):
        for x in range(R.size):
            if x in rads[j]:
                continue
            rx = radical(ideal_combine(Ij, ideal_span(R, [x]), "colon"))
            for i in range(len(members)):
                if i != j and rads[i] <= rx:
                    return i, j, x
    return None

"""Additive-subgroup closure helpers shared by ideals and submodules."""

from __future__ import annotations

import numpy as np

from .errors import CapExceeded


def subgroup_sum(add: np.ndarray, a, b) -> np.ndarray:
    """Elementwise sums of two subgroups given as index arrays (sorted, unique)."""
    return np.unique(add[np.ix_(np.asarray(a), np.asarray(b))])


def span(add: np.ndarray, zero: int, cyclic_sets) -> np.ndarray:
    """Sum of the given subgroups, starting from the zero subgroup."""
    acc = np.array([zero])
    for c in cyclic_sets:
        acc = subgroup_sum(add, acc, c)
    return acc


def greedy_generators(add: np.ndarray, zero: int, elements, cyclic_of) -> tuple[int, ...]:
    """Walk ``elements`` in index order, keeping each one not yet spanned."""
    target = len(elements)
    acc = np.array([zero])
    gens: list[int] = []
    seen = set(acc.tolist())
    for x in sorted(elements):
        if x in seen:
            continue
        gens.append(int(x))
        acc = subgroup_sum(add, acc, cyclic_of(int(x)))
        seen = set(acc.tolist())
        if len(seen) == target:
            break
    return tuple(gens)


def subgroup_lattice(add: np.ndarray, zero: int, cyclics, cap: int) -> list[frozenset]:
    """All sums of the given cyclic subgroups (the full lattice they generate).

    Breadth-first from the zero subgroup; every node is joined with every
    cyclic piece it does not already contain.
    """
    cyclic_sets = []
    seen_c = set()
    for c in cyclics:
        key = frozenset(int(v) for v in c)
        if key not in seen_c:
            seen_c.add(key)
            cyclic_sets.append((key, np.array(sorted(key))))
    start = frozenset([zero])
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            arr = np.array(sorted(node))
            for key, carr in cyclic_sets:
                if key <= node:
                    continue
                joined = frozenset(subgroup_sum(add, arr, carr).tolist())
                if joined not in found:
                    found.add(joined)
                    if len(found) > cap:
                        raise CapExceeded(f"lattice has more than {cap} members")
                    nxt.append(joined)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))

"""Search parameterized families for submodules with a prescribed flag pattern.

Families and their enumeration order:

* ``zn``, ``zn:N``, ``zn:A..B``: regular(Z/n) for n ascending (default 2..100),
  submodules in lattice order (size, then sorted elements).
* ``small-finite``: the modules of that corpus, in corpus order.
* ``zint``, ``zint:N``: ideals nZ of Z for n = 0, 2, 3, ... up to N (default 1000).
* ``z2``: the shipped sublattices of Z^2 for the given seed.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional

from ..errors import AlgebraError
from ..finite_module import classify_submodule, regular
from ..finite_ring import residue
from ..integer_module import classify_int_ideal, classify_int_submodule
from ..spec import spec_for_int_ideal, spec_for_lattice, spec_for_submodule
from .corpus import Corpus, shipped_lattices

FLAG_ALIASES = {
    "proper": "proper",
    "prime": "prime",
    "primary": "primary",
    "2-absorbing": "two_absorbing",
    "2abs": "two_absorbing",
    "two_absorbing": "two_absorbing",
    "2ap-primary": "two_absorbing_primary",
    "2ap": "two_absorbing_primary",
    "two_absorbing_primary": "two_absorbing_primary",
    "1ap": "one_absorbing_primary",
    "one_absorbing_primary": "one_absorbing_primary",
}

TRUE_WORDS = {"+", "true", "yes", "1"}
FALSE_WORDS = {"-", "−", "false", "no", "0"}


def parse_query(terms) -> dict:
    """``["2ap-primary=+", "1ap=-"]`` -> {flag: bool}; raises KeyError on unknown flags."""
    query = {}
    for term in terms:
        if "=" not in term:
            raise ValueError(f"query term {term!r} is not of the form flag=+ or flag=-")
        name, value = term.split("=", 1)
        key = FLAG_ALIASES.get(name.strip().lower())
        if key is None:
            raise KeyError(f"unknown flag {name!r}; known: {', '.join(sorted(FLAG_ALIASES))}")
        v = value.strip().lower()
        if v in TRUE_WORDS:
            query[key] = True
        elif v in FALSE_WORDS:
            query[key] = False
        else:
            raise ValueError(f"flag value {value!r} must be + or -")
    return query


def _range(arg: Optional[str], default: tuple[int, int]) -> range:
    if arg is None:
        return range(default[0], default[1] + 1)
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", arg)
    if not m:
        raise ValueError(f"bad family range {arg!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return range(lo, hi + 1)


def _candidates(family: str, seed: int) -> Iterator[tuple]:
    """Yield (label, flags, report json, spec text thunk) in the family's order."""
    name, _, arg = family.partition(":")
    arg = arg or None
    if name == "zn":
        for n in _range(arg, (2, 100)):
            if n < 2:
                continue
            M = regular(residue(n))
            for N in M.submodules():
                yield (f"regular(Z/{n})", N.generator_labels(), lambda N=N: classify_submodule(N),
                       lambda N=N: spec_for_submodule(N))
    elif name == "small-finite":
        for tag, M in Corpus("small-finite", seed).modules():
            for N in M.submodules():
                yield (tag, N.generator_labels(), lambda N=N: classify_submodule(N),
                       lambda N=N: spec_for_submodule(N))
    elif name == "zint":
        for n in _range(arg, (0, 1000)):
            if n == 1:
                continue
            yield ("Z", [n], lambda n=n: classify_int_ideal(n), lambda n=n: spec_for_int_ideal(n))
    elif name == "z2":
        for L in shipped_lattices(SHIPPED_LATTICES, seed):
            if not L.is_proper():
                continue
            yield ("Z^2", L.to_json(), lambda L=L: classify_int_submodule(L),
                   lambda L=L: spec_for_lattice(L))
    else:
        raise KeyError(f"unknown family {family!r}")


SHIPPED_LATTICES = 120


def mine(query: dict, family: str = "zn", budget: Optional[int] = None,
         limit: Optional[int] = None, seed: int = 0) -> list[dict]:
    """Instances of ``family`` whose flags match ``query``, in enumeration order.

    ``budget`` caps the number of candidates examined and ``limit`` the
    number of witnesses returned.  An empty list is a valid answer.
    """
    for key in query:
        if key not in FLAG_ALIASES.values():
            raise KeyError(f"unknown flag {key!r}")
    out = []
    for index, (module, target, report_fn, spec_fn) in enumerate(_candidates(family, seed)):
        if budget is not None and index >= budget:
            break
        try:
            report = report_fn()
        except AlgebraError:
            continue
        flags = report.flags()
        if all(flags.get(k) == v for k, v in query.items()):
            out.append({"family": family, "index": index, "module": module, "target": target,
                        "report": report.to_json(), "spec": spec_fn()})
            if limit is not None and len(out) >= limit:
                break
    return out

"""The instance-spec language: parsing into live objects and writing specs back out.

A spec is a line-oriented document::

    version 1
    ring R = zn 12              # also: Z | product A B | quotient A [g, ...] | idealize A M
    module M = regular          # also: free k | group n1 n2 ... | product M1 M2
                                #       quotient M [g, ...] | intlattice k | explicit ADD ACT
    sub N = [4]                 # in the latest module, or: sub N = [4] in M
    ideal I = [2, 3] in R

Names are optional for rings and modules (``ring zn 12``); the latest ring
and module are the defaults for later lines.  Element literals are Python
literals, so tuples such as ``(4, 0)`` name coordinates.  ``module`` lines
take ``over NAME`` to pick a ring other than the latest one.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Optional

from .errors import AlgebraError, CapExceeded
from .finite_module import (FiniteModule, abelian_group, explicit, free, idealize,
                            product_module, quotient_module, regular, span)
from .finite_ring import DEFAULT_CAP, FiniteRing, ideal_span, product, quotient, residue
from .integer_module import IntIdeal, lattice

SUPPORTED_VERSIONS = (1,)
NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


class SpecError(AlgebraError):
    """Syntax error or unresolved name, with a 1-based source location."""

    def __init__(self, message: str, line: int, column: int, token: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = f"line {line}, column {column}"
        at = f" at {token!r}" if token is not None else ""
        super().__init__(f"{where}: {message}{at}")


class SpecCapError(CapExceeded):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class IntegerRing:
    """Marker for the ring Z (modules over it are lattices or finite groups)."""
    descriptor = ("Z",)

    def __repr__(self):
        return "Z"


@dataclass
class Target:
    kind: str          # submodule | ideal | int_submodule | int_ideal
    value: Any
    container: Any
    line: int


@dataclass
class InstanceSpec:
    version: int
    rings: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    targets: dict = field(default_factory=dict)
    source: str = ""

    def target(self, name: str) -> Target:
        if name not in self.targets:
            raise KeyError(name)
        return self.targets[name]


@dataclass
class _Tok:
    text: str
    col: int
    bracket: bool


def _tokenize(line: str, lineno: int) -> list[_Tok]:
    toks = []
    i, n = 0, len(line)
    while i < n:
        c = line[i]
        if c.isspace():
            i += 1
            continue
        if c == "#":
            break
        start = i
        if c in "[(":
            depth = 0
            while i < n:
                if line[i] in "[(":
                    depth += 1
                elif line[i] in "])":
                    depth -= 1
                    if depth == 0:
                        i += 1
                        break
                i += 1
            else:
                raise SpecError("unbalanced brackets", lineno, start + 1, line[start:].strip())
            toks.append(_Tok(line[start:i], start + 1, True))
        else:
            while i < n and not line[i].isspace() and line[i] not in "[(#":
                i += 1
            toks.append(_Tok(line[start:i], start + 1, False))
    return toks


class _Parser:
    def __init__(self, text: str, cap: int):
        self.text = text
        self.cap = cap
        self.spec = InstanceSpec(version=1, source=text)
        self.ring = None
        self.module = None
        self.auto = {"ring": 0, "module": 0}

    # helpers -------------------------------------------------------------

    def err(self, msg, tok: Optional[_Tok], lineno, col=1):
        if tok is None:
            raise SpecError(msg, lineno, col)
        raise SpecError(msg, lineno, tok.col, tok.text)

    def int_tok(self, tok, lineno, lo=None):
        if tok is None:
            self.err("expected an integer", None, lineno)
        try:
            v = int(tok.text)
        except ValueError:
            self.err("expected an integer", tok, lineno)
        if lo is not None and v < lo:
            self.err(f"expected an integer >= {lo}", tok, lineno)
        return v

    def literal_list(self, tok, lineno):
        if tok is None or not tok.bracket or not tok.text.startswith("["):
            self.err("expected a bracketed element list", tok, lineno)
        try:
            value = ast.literal_eval(tok.text)
        except (ValueError, SyntaxError):
            self.err("malformed element list", tok, lineno)
        if not isinstance(value, list):
            self.err("expected a bracketed element list", tok, lineno)
        return value

    def lookup(self, table, tok, lineno, what):
        if tok is None:
            self.err(f"expected a {what} name", None, lineno)
        if tok.text not in table:
            self.err(f"unresolved {what} name", tok, lineno)
        return table[tok.text]

    def capped(self, build, lineno, col):
        try:
            return build()
        except CapExceeded as exc:
            raise SpecCapError(str(exc), lineno, col) from None

    def elements(self, container, labels, tok, lineno):
        out = []
        for lab in labels:
            try:
                out.append(container.element(lab))
            except (AlgebraError, TypeError, ValueError):
                self.err(f"{lab!r} is not an element", tok, lineno)
        return out

    def split_name(self, toks, lineno, kind):
        """``kind NAME = ...`` or ``kind ...``; returns (name, rest)."""
        if len(toks) >= 3 and toks[2].text == "=":
            name = toks[1]
            if not NAME.match(name.text):
                self.err("invalid name", name, lineno)
            return name.text, toks[3:]
        self.auto[kind] += 1
        base = "R" if kind == "ring" else "M"
        name = base if self.auto[kind] == 1 else f"{base}{self.auto[kind]}"
        return name, toks[1:]

    # statements ------------------------------------------------------------

    def parse(self):
        seen_statement = False
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            toks = _tokenize(raw, lineno)
            if not toks:
                continue
            head = toks[0]
            if head.text == "version":
                if seen_statement:
                    self.err("version must be the first statement", head, lineno)
                v = self.int_tok(toks[1] if len(toks) > 1 else None, lineno)
                if v not in SUPPORTED_VERSIONS:
                    self.err("unsupported spec version", toks[1], lineno)
                if len(toks) > 2:
                    self.err("unexpected token", toks[2], lineno)
                self.spec.version = v
            elif head.text == "ring":
                self.ring_stmt(toks, lineno)
            elif head.text == "module":
                self.module_stmt(toks, lineno)
            elif head.text in ("sub", "ideal"):
                self.target_stmt(toks, lineno)
            else:
                self.err("unknown statement", head, lineno)
            seen_statement = True
        return self.spec

    def ring_stmt(self, toks, lineno):
        name, rest = self.split_name(toks, lineno, "ring")
        if not rest:
            self.err("expected a ring constructor", None, lineno, len(toks) and toks[-1].col)
        kind, args = rest[0], rest[1:]
        rings = self.spec.rings
        if kind.text == "zn":
            n = self.int_tok(args[0] if args else None, lineno)
            if n < 2:
                self.err("modulus must be at least 2", args[0], lineno)
            if n > self.cap:
                raise SpecCapError(f"ring size {n} exceeds cap {self.cap}", lineno, args[0].col)
            R, used = residue(n, cap=self.cap), 1
        elif kind.text == "Z":
            R, used = IntegerRing(), 0
        elif kind.text == "product":
            A = self.finite_ring(args[0] if args else None, lineno)
            B = self.finite_ring(args[1] if len(args) > 1 else None, lineno)
            R, used = self.capped(lambda: product(A, B, cap=self.cap), lineno, kind.col), 2
        elif kind.text == "quotient":
            A = self.finite_ring(args[0] if args else None, lineno)
            tok = args[1] if len(args) > 1 else None
            gens = self.elements(A, self.literal_list(tok, lineno), tok, lineno)
            I = ideal_span(A, gens)
            if not I.is_proper:
                self.err("quotient by the whole ring", tok, lineno)
            R, used = quotient(A, I, cap=self.cap), 2
        elif kind.text == "idealize":
            A = self.finite_ring(args[0] if args else None, lineno)
            M = self.lookup(self.spec.modules, args[1] if len(args) > 1 else None, lineno,
                            "module")
            if not isinstance(M, FiniteModule) or M.ring is not A:
                self.err("module is not over the idealized ring", args[1], lineno)
            R, used = self.capped(lambda: idealize(A, M, cap=self.cap), lineno, kind.col), 2
        else:
            self.err("unknown ring constructor", kind, lineno)
        if len(args) > used:
            self.err("unexpected token", args[used], lineno)
        if name in rings:
            self.err("ring name already defined", toks[1], lineno)
        rings[name] = R
        self.ring = R

    def finite_ring(self, tok, lineno) -> FiniteRing:
        R = self.lookup(self.spec.rings, tok, lineno, "ring")
        if isinstance(R, IntegerRing):
            self.err("a finite ring is required here", tok, lineno)
        return R

    def module_stmt(self, toks, lineno):
        name, rest = self.split_name(toks, lineno, "module")
        if not rest:
            self.err("expected a module constructor", None, lineno)
        ring = self.ring
        if len(rest) >= 2 and rest[-2].text == "over":
            ring = self.lookup(self.spec.rings, rest[-1], lineno, "ring")
            rest = rest[:-2]
        if ring is None:
            self.err("no ring declared before this module", rest[0], lineno)
        kind, args = rest[0], rest[1:]
        over_z = isinstance(ring, IntegerRing)
        used = 0
        if kind.text == "regular":
            M = lattice_module(1) if over_z else regular(ring)
        elif kind.text == "intlattice":
            if not over_z:
                self.err("intlattice needs ring Z", kind, lineno)
            k = self.int_tok(args[0] if args else None, lineno, lo=1)
            if k > 4:
                raise SpecCapError("lattice rank above 4", lineno, args[0].col)
            M, used = lattice_module(k), 1
        elif kind.text == "group":
            if not over_z:
                self.err("group needs ring Z", kind, lineno)
            if not args:
                self.err("expected cyclic orders", None, lineno, kind.col)
            orders = [self.int_tok(t, lineno, lo=1) for t in args]
            M, used = self.capped(lambda: abelian_group(orders, cap=self.cap), lineno,
                                  kind.col), len(args)
        elif kind.text == "free":
            if over_z:
                self.err("use intlattice for free Z-modules", kind, lineno)
            k = self.int_tok(args[0] if args else None, lineno, lo=1)
            M, used = self.capped(lambda: free(ring, k, cap=self.cap), lineno, kind.col), 1
        elif kind.text == "product":
            A = self.finite_module(args[0] if args else None, lineno)
            B = self.finite_module(args[1] if len(args) > 1 else None, lineno)
            M, used = self.capped(lambda: product_module(A, B, cap=self.cap), lineno,
                                  kind.col), 2
        elif kind.text == "quotient":
            A = self.finite_module(args[0] if args else None, lineno)
            tok = args[1] if len(args) > 1 else None
            N = span(A, self.elements(A, self.literal_list(tok, lineno), tok, lineno))
            M, used = quotient_module(A, N)[0], 2
        elif kind.text == "explicit":
            if over_z:
                self.err("explicit modules need a finite ring", kind, lineno)
            if len(args) < 2:
                self.err("explicit needs an addition and an action table", None, lineno,
                         kind.col)
            add = self.literal_list(args[0], lineno)
            act = self.literal_list(args[1], lineno)
            try:
                M = explicit(ring, add, act, cap=self.cap)
            except CapExceeded as exc:
                raise SpecCapError(str(exc), lineno, kind.col) from None
            except (AlgebraError, ValueError, IndexError) as exc:
                self.err(f"invalid explicit module: {exc}", args[0], lineno)
            used = 2
        else:
            self.err("unknown module constructor", kind, lineno)
        if len(args) > used:
            self.err("unexpected token", args[used], lineno)
        if name in self.spec.modules:
            self.err("module name already defined", toks[1], lineno)
        self.spec.modules[name] = M
        self.module = M

    def finite_module(self, tok, lineno) -> FiniteModule:
        M = self.lookup(self.spec.modules, tok, lineno, "module")
        if not isinstance(M, FiniteModule):
            self.err("a finite module is required here", tok, lineno)
        return M

    def target_stmt(self, toks, lineno):
        head = toks[0]
        if len(toks) < 4 or toks[2].text != "=":
            self.err(f"expected '{head.text} NAME = [...]'", toks[1] if len(toks) > 1 else head,
                     lineno)
        name = toks[1]
        if not NAME.match(name.text):
            self.err("invalid name", name, lineno)
        if name.text in self.spec.targets:
            self.err("target name already defined", name, lineno)
        gens_tok = toks[3]
        labels = self.literal_list(gens_tok, lineno)
        extra = toks[4:]
        if head.text == "sub":
            where = self.module
            if extra:
                if extra[0].text != "in" or len(extra) != 2:
                    self.err("unexpected token", extra[0], lineno)
                where = self.lookup(self.spec.modules, extra[1], lineno, "module")
            if where is None:
                self.err("no module declared before this submodule", head, lineno)
            target = self.make_sub(where, labels, gens_tok, lineno)
        else:
            where = self.ring
            if extra:
                if extra[0].text != "in" or len(extra) != 2:
                    self.err("unexpected token", extra[0], lineno)
                where = self.lookup(self.spec.rings, extra[1], lineno, "ring")
            if where is None:
                self.err("no ring declared before this ideal", head, lineno)
            target = self.make_ideal(where, labels, gens_tok, lineno)
        self.spec.targets[name.text] = target

    def make_sub(self, M, labels, tok, lineno) -> Target:
        if isinstance(M, LatticeModule):
            vecs = []
            for lab in labels:
                v = (lab,) if isinstance(lab, int) else lab
                if not isinstance(v, (tuple, list)) or len(v) != M.rank or \
                        not all(isinstance(x, int) for x in v):
                    self.err(f"{lab!r} is not a vector of Z^{M.rank}", tok, lineno)
                vecs.append(tuple(v))
            try:
                L = lattice(vecs, M.rank)
            except CapExceeded as exc:
                raise SpecCapError(str(exc), lineno, tok.col) from None
            return Target("int_submodule", L, M, lineno)
        gens = self.elements(M, labels, tok, lineno)
        return Target("submodule", span(M, gens), M, lineno)

    def make_ideal(self, R, labels, tok, lineno) -> Target:
        if isinstance(R, IntegerRing):
            if not all(isinstance(x, int) for x in labels):
                self.err("ideals of Z take integer generators", tok, lineno)
            g = 0
            for x in labels:
                g = gcd(g, x)
            return Target("int_ideal", IntIdeal(g), R, lineno)
        return Target("ideal", ideal_span(R, self.elements(R, labels, tok, lineno)), R, lineno)


@dataclass(frozen=True)
class LatticeModule:
    """Z^k as a parsed module."""
    rank: int

    @property
    def descriptor(self):
        return ("intlattice", self.rank)


def lattice_module(k: int) -> LatticeModule:
    return LatticeModule(k)


def parse_spec(text: str, cap: int = DEFAULT_CAP) -> InstanceSpec:
    """Parse and build a spec; raises SpecError (syntax, names) or SpecCapError."""
    if not isinstance(text, str):
        raise TypeError("spec text must be a string")
    return _Parser(text, cap).parse()


# writing specs -----------------------------------------------------------------

def _lit(label) -> str:
    return repr(tuple(label)) if isinstance(label, list) else repr(label)


def _list(labels) -> str:
    return "[" + ", ".join(_lit(x) for x in labels) + "]"


class _Writer:
    def __init__(self):
        self.lines = ["version 1"]
        self.rings: dict[int, str] = {}
        self.modules: dict[int, str] = {}

    def ring(self, R) -> str:
        if id(R) in self.rings:
            return self.rings[id(R)]
        d = R.descriptor
        kind = d[0]
        if kind == "residue":
            body = f"zn {d[1]}"
        elif kind == "product":
            a, b = (self.ring(p) for p in R.parts)
            body = f"product {a} {b}"
        elif kind == "quotient":
            a = self.ring(R.parts[0])
            body = f"quotient {a} {_list(d[2])}"
        elif kind == "idealize":
            base, M = R.parts
            a = self.ring(base)
            m = self.module(M)
            body = f"idealize {a} {m}"
        elif kind == "integers":
            body = "Z"
        else:
            raise AlgebraError(f"no spec form for ring {d!r}")
        name = f"R{len(self.rings)}"
        self.lines.append(f"ring {name} = {body}")
        self.rings[id(R)] = name
        return name

    def module(self, M) -> str:
        if id(M) in self.modules:
            return self.modules[id(M)]
        d = M.descriptor
        kind = d[0]
        if kind == "group":
            over = self.ring(M.ring)
            body = "group " + " ".join(str(n) for n in d[1])
        elif kind == "regular":
            over = self.ring(M.ring)
            body = "regular"
        elif kind == "free":
            over = self.ring(M.ring)
            body = f"free {d[2]}"
        elif kind == "product":
            a, b = (self.module(p) for p in M.parts)
            body, over = f"product {a} {b}", None
        elif kind == "quotient":
            parent = M.parts[0]
            a = self.module(parent)
            body, over = f"quotient {a} {_list(d[2])}", None
        else:
            raise AlgebraError(f"no spec form for module {d!r}")
        name = f"M{len(self.modules)}"
        suffix = f" over {over}" if over is not None else ""
        self.lines.append(f"module {name} = {body}{suffix}")
        self.modules[id(M)] = name
        return name


def spec_for_submodule(N, name: str = "N") -> str:
    """A spec text that rebuilds N's module and names N by its canonical generators."""
    M = N.module
    canonical = M.submodule_from_elements(N.elements)
    w = _Writer()
    m = w.module(M)
    w.lines.append(f"sub {name} = {_list(canonical.generator_labels())} in {m}")
    return "\n".join(w.lines) + "\n"


def spec_for_ideal(I, name: str = "I") -> str:
    R = I.ring
    canonical = R.ideal_from_elements(I.elements)
    w = _Writer()
    r = w.ring(R)
    w.lines.append(f"ideal {name} = {_list(canonical.generator_labels())} in {r}")
    return "\n".join(w.lines) + "\n"


def spec_for_int_ideal(n: int, name: str = "I") -> str:
    return f"version 1\nring Z\nideal {name} = [{n}]\n"


def spec_for_lattice(L, name: str = "N") -> str:
    k = L.ambient_rank
    vecs = ", ".join(repr(tuple(v)) for v in L.basis)
    return f"version 1\nring Z\nmodule intlattice {k}\nsub {name} = [{vecs}]\n"

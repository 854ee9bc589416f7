"""Command-line front end: classify, verify, mine.

Exit codes: 0 success, 1 law violation or vacuous law, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import AlgebraError, CapExceeded
from .finite_module import classify_submodule
from .finite_ring import classify_ideal
from .integer_module import classify_int_ideal, classify_int_submodule, lattice
from .spec import SpecError, parse_spec

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class UsageError(Exception):
    pass


# classify ---------------------------------------------------------------------------

def classify_target(spec, name: str) -> dict:
    t = spec.target(name)
    if t.kind == "submodule":
        report = classify_submodule(t.value).to_json()
    elif t.kind == "ideal":
        report = classify_ideal(t.value).to_json()
    elif t.kind == "int_submodule":
        report = classify_int_submodule(t.value).to_json()
    elif t.kind == "int_ideal":
        if t.value.generator == 1:
            # Z itself: report it through the rank-one lattice, which handles improper input
            report = classify_int_submodule(lattice([(1,)], 1)).to_json()
        else:
            report = classify_int_ideal(t.value).to_json()
    else:
        raise AlgebraError(f"cannot classify target kind {t.kind}")
    return {"kind": t.kind, "report": report, "target": name, "version": spec.version}


def _read_spec(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_classify(args, out) -> int:
    spec = parse_spec(_read_spec(args.spec))
    names = list(spec.targets)
    if args.target is None:
        if len(names) != 1:
            raise UsageError("the spec file names several targets; choose one with --target "
                             f"({', '.join(names) or 'none defined'})")
        name = names[0]
    else:
        name = args.target
        if name not in spec.targets:
            raise UsageError(f"unknown target {name!r}; known: {', '.join(names) or 'none'}")
    doc = classify_target(spec, name)
    if args.format == "json":
        out.write(dumps(doc) + "\n")
    else:
        out.write(_classify_table(doc))
    return EXIT_OK


def _classify_table(doc: dict) -> str:
    rep = doc["report"]
    lines = [f"target {doc['target']} ({doc['kind']})"]
    for flag, value in rep["flags"].items():
        wit = rep.get("witnesses", {}).get(flag)
        extra = f"   witness {wit}" if wit is not None else ""
        lines.append(f"  {flag:24s} {'yes' if value else 'no'}{extra}")
    for key in sorted(rep):
        if key not in ("flags", "witnesses"):
            lines.append(f"  {key:24s} {rep[key]}")
    return "\n".join(lines) + "\n"


# verify -------------------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    from .suite import Corpus, law_ids, run_laws
    known = law_ids()
    wanted = args.laws or ["all"]
    if "all" in wanted:
        ids = known
    else:
        unknown = [i for i in wanted if i not in known]
        if unknown:
            raise UsageError(f"unknown law id(s): {', '.join(unknown)}")
        ids = wanted
    try:
        corpus = Corpus(args.corpus, args.seed)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    reports = run_laws(ids, corpus, budget=args.budget, workers=args.workers)
    for r in reports:
        if args.format == "json":
            out.write(dumps(r.to_json(timings=args.timings)) + "\n")
        else:
            out.write(f"{r.law_id:14s} {r.status:8s} checked={r.instances_checked:<7d} "
                      f"non_vacuous={r.non_vacuous_count:<7d} "
                      f"violations={r.violation_count}\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


# mine ---------------------------------------------------------------------------------

def cmd_mine(args, out) -> int:
    from .suite.mining import mine, parse_query
    try:
        query = parse_query(args.query)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0])) from None
    try:
        found = mine(query, args.family, budget=args.budget, limit=args.limit, seed=args.seed)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0])) from None
    for w in found:
        if args.format == "json":
            out.write(dumps(w) + "\n")
        else:
            out.write(f"#{w['index']:<5d} {w['module']}  {w['target']}\n")
    return EXIT_OK


# entry point ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="absorbing",
                                description="Classify, verify and mine 1-absorbing primary "
                                            "submodules.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "table"), default="json")

    c = sub.add_parser("classify", help="classify a submodule or ideal named in a spec")
    c.add_argument("--spec", required=True, help="spec file ('-' for stdin)")
    c.add_argument("--target", help="name of the submodule or ideal")
    common(c)

    v = sub.add_parser("verify", help="run laws over a named corpus")
    v.add_argument("laws", nargs="*", help="law ids, or 'all' (default)")
    v.add_argument("--corpus", default="small-finite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=None, help="max instances per law")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include runtimes in the JSON")
    common(v)

    m = sub.add_parser("mine", help="search a family for a flag pattern")
    m.add_argument("query", nargs="+", help="terms like 1ap=- 2ap-primary=+")
    m.add_argument("--family", default="zn")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--budget", type=int, default=None, help="max candidates examined")
    m.add_argument("--limit", type=int, default=None, help="max witnesses emitted")
    m.add_argument("--workers", type=int, default=1, help="accepted for symmetry; mining is "
                                                          "sequential")
    common(m)
    return p


def main(argv: Optional[list] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {"classify": cmd_classify, "verify": cmd_verify, "mine": cmd_mine}[args.command]
    try:
        return handler(args, out)
    except CapExceeded as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

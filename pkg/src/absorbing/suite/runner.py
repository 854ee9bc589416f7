"""Run laws over corpora and collect reports."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .corpus import Corpus
from .laws import Law, get_law

# stored violation witnesses per report; the count is always exact
MAX_STORED_VIOLATIONS = 25


@dataclass
class LawReport:
    law_id: str
    reference: str
    corpus: str
    seed: int
    instances_checked: int
    non_vacuous_count: int
    violation_count: int
    violations: list
    split: dict = field(default_factory=dict)
    truncated: bool = False
    runtime: float = 0.0

    @property
    def status(self) -> str:
        if self.violation_count:
            return "fail"
        if self.non_vacuous_count == 0:
            return "vacuous"
        return "pass"

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "law": self.law_id,
            "reference": self.reference,
            "corpus": self.corpus,
            "seed": self.seed,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "non_vacuous_count": self.non_vacuous_count,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "split": dict(sorted(self.split.items())),
            "truncated": self.truncated,
        }
        if timings:
            out["runtime"] = round(self.runtime, 3)
        return out


def _evaluate_slice(law: Law, instances) -> tuple[int, int, list, Counter]:
    held = 0
    bad = []
    split = Counter()
    for inst in instances:
        h, v, s = law.evaluate(inst.payload)
        held += h
        for w in v:
            bad.append({"instance": inst.tag, **w})
        if s:
            split.update(s)
    return len(instances), held, bad, split


def _merge(law: Law, corpus: Corpus, parts, truncated: bool, runtime: float) -> LawReport:
    checked = held = 0
    bad: list = []
    split = Counter()
    for c, h, v, s in parts:
        checked += c
        held += h
        bad.extend(v)
        split.update(s)
    return LawReport(law.id, law.reference, corpus.name, corpus.seed, checked, held, len(bad),
                     bad[:MAX_STORED_VIOLATIONS], dict(split), truncated, runtime)


def run_law(law, corpus: Corpus, budget: Optional[int] = None, kind: Optional[str] = None
            ) -> LawReport:
    """Evaluate ``law`` on the corpus instances of its kind, in corpus order.

    ``budget`` caps the number of instances examined (the first ones in
    enumeration order), so a budgeted run is a deterministic prefix.
    ``kind`` asserts the expected instance kind and raises on a mismatch.
    """
    if isinstance(law, str):
        law = get_law(law)
    if kind is not None and kind != law.instance_kind:
        raise ValueError(f"law {law.id} takes {law.instance_kind} instances, not {kind}")
    start = time.perf_counter()
    items = corpus.instances(law.instance_kind)
    truncated = budget is not None and budget < len(items)
    if truncated:
        items = items[:budget]
    part = _evaluate_slice(law, items)
    return _merge(law, corpus, [part], truncated, time.perf_counter() - start)


# worker pool ------------------------------------------------------------------------

_worker_corpus: Optional[Corpus] = None


def _init_worker(name: str, seed: int):
    global _worker_corpus
    _worker_corpus = Corpus(name, seed)


def _work(job):
    law_id, lo, hi = job
    law = get_law(law_id)
    items = _worker_corpus.instances(law.instance_kind)[lo:hi]
    return _evaluate_slice(law, items)


def run_laws(law_ids, corpus: Corpus, budget: Optional[int] = None, workers: int = 1
             ) -> list[LawReport]:
    """Run several laws; with ``workers`` > 1 instances are split into index-ordered chunks.

    Every worker regenerates the corpus from (name, seed), evaluates its
    chunk, and the chunks are merged back in index order, so the reports do
    not depend on the worker count.
    """
    laws = [get_law(i) if isinstance(i, str) else i for i in law_ids]
    if workers <= 1:
        return [run_law(law, corpus, budget) for law in laws]
    jobs, layout = [], []
    for law in laws:
        n = len(corpus.instances(law.instance_kind))
        truncated = budget is not None and budget < n
        n = min(n, budget) if budget is not None else n
        step = max(1, -(-n // (workers * 4)))
        chunks = [(law.id, lo, min(lo + step, n)) for lo in range(0, n, step)] or [(law.id, 0, 0)]
        layout.append((law, len(jobs), len(chunks), truncated))
        jobs.extend(chunks)
    start = time.perf_counter()
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(corpus.name, corpus.seed)) as pool:
        results = list(pool.map(_work, jobs))
    elapsed = time.perf_counter() - start
    reports = []
    for law, first, count, truncated in layout:
        parts = results[first:first + count]
        reports.append(_merge(law, corpus, parts, truncated, elapsed))
    return reports

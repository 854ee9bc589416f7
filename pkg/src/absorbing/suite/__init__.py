"""Executable laws, instance corpora, coverings and witness mining."""

from .corpus import Corpus, Instance, corpus_names, enumerate_coverings
from .covering import (AvoidanceVerdict, Covering, avoidance_check, covering_tools,
                       efficient_check, is_efficient, reduce_to_efficient)
from .laws import Law, get_law, law_catalog, law_ids
from .runner import LawReport, run_law, run_laws

__all__ = ["AvoidanceVerdict", "Corpus", "Covering", "Instance", "Law", "LawReport",
           "avoidance_check", "corpus_names", "covering_tools", "efficient_check",
           "enumerate_coverings", "get_law", "is_efficient", "law_catalog", "law_ids",
           "reduce_to_efficient", "run_law", "run_laws"]

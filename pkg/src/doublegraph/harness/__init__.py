"""Corpus generation and claim-by-claim verification sweeps."""

from doublegraph.harness.corpus import (
    CorpusSpec,
    PTooLarge,
    enumerate_labeled_graphs,
    iter_corpus,
    named_fixture,
    random_graph,
)
from doublegraph.harness.suite import SuiteReport, probe_midband_max_lambda, replay, run_suite

__all__ = [
    "CorpusSpec",
    "PTooLarge",
    "SuiteReport",
    "enumerate_labeled_graphs",
    "iter_corpus",
    "named_fixture",
    "probe_midband_max_lambda",
    "random_graph",
    "replay",
    "run_suite",
]

"""Run the claim checks over a corpus and collect counterexamples and audit tables."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Iterable, Sequence

from doublegraph.graph import Graph
from doublegraph.harness.checks import CHECKS, Facts
from doublegraph.harness.corpus import CorpusSpec, iter_corpus
from doublegraph.io import emit_elt, parse_elt

SCHEMA = 1


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckReport:
    check: str
    audit: bool
    tested: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: dict | None = None
    audit_rows: list[dict] = field(default_factory=list)


@dataclass
class SuiteReport:
    graphs: int
    ns: list[int]
    checks: dict[str, CheckReport]
    witnesses_checked: int = 0
    witness_failures: list[str] = field(default_factory=list)
    consistency: dict[str, bool] = field(default_factory=dict)

    @property
    def failed_checks(self) -> list[str]:
        return [c.check for c in self.checks.values() if c.failed and not c.audit]

    @property
    def ok(self) -> bool:
        return not self.failed_checks and not self.witness_failures and all(self.consistency.values())

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "graphs": self.graphs,
            "ns": self.ns,
            "ok": self.ok,
            "witnesses_checked": self.witnesses_checked,
            "witness_failures": self.witness_failures,
            "consistency": self.consistency,
            "checks": [asdict(c) for c in self.checks.values()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_table(self) -> str:
        width = max((len(c) for c in self.checks), default=5)
        lines = [
            f"graphs={self.graphs} n={','.join(map(str, self.ns))} "
            f"witnesses={self.witnesses_checked} witness_failures={len(self.witness_failures)}",
            f"{'check':<{width}}  status  tested  passed  failed  skipped  rows",
        ]
        for c in self.checks.values():
            if c.audit:
                status = "AUDIT"
            else:
                status = "FAIL" if c.failed else "pass"
            lines.append(
                f"{c.check:<{width}}  {status:<6}  {c.tested:>6}  {c.passed:>6}  "
                f"{c.failed:>6}  {c.skipped:>7}  {len(c.audit_rows):>4}"
            )
        for name, agree in self.consistency.items():
            lines.append(f"consistency {name}: {'agree' if agree else 'DISAGREE'}")
        for c in self.checks.values():
            if c.counterexample and not c.audit:
                cx = c.counterexample
                lines.append(f"\n{c.check} counterexample {cx['graph']} (n={cx['n']}): {cx['detail']}")
                lines.append(cx["elt"].rstrip())
        for c in self.checks.values():
            if c.audit_rows:
                lines.append(f"\n{c.check} audit rows:")
                for row in c.audit_rows:
                    lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items() if k != "elt"))
        return "\n".join(lines) + "\n"


def _applicable(check_id: str, ns: Sequence[int]) -> list[int]:
    only = CHECKS[check_id].only_n
    if only is None:
        return list(ns)
    return [only] if only in ns else []


def evaluate_graph(g: Graph, check_ids: Sequence[str], ns: Sequence[int]):
    """All ``(check, n, outcome)`` triples for one graph plus its witness bookkeeping."""
    facts = Facts(g)
    results = []
    for cid in check_ids:
        for n in _applicable(cid, ns):
            results.append((cid, n, CHECKS[cid].fn(facts, n)))
    return results, facts.witnesses_checked, facts.witness_failures


def _work(item):
    index, label, g, check_ids, ns = item
    return (index, label, g) + evaluate_graph(g, check_ids, ns)


def _corpus_items(corpus: CorpusSpec | Sequence[CorpusSpec]) -> Iterable[tuple[str, Graph]]:
    specs = [corpus] if isinstance(corpus, CorpusSpec) else list(corpus)
    for spec in specs:
        yield from iter_corpus(spec)


def run_suite(
    corpus: CorpusSpec | Sequence[CorpusSpec],
    checks: Iterable[str] | None = None,
    ns: Iterable[int] = (2, 3),
    jobs: int = 1,
) -> SuiteReport:
    """Evaluate every selected check on every corpus graph for each ``n``.

    Results are merged in corpus order, so the report does not depend on
    ``jobs``.
    """
    wanted = set(CHECKS) if checks is None else set(checks)
    unknown = wanted - set(CHECKS)
    if unknown:
        raise UnknownCheck(", ".join(sorted(unknown)))
    check_ids = [c for c in CHECKS if c in wanted]
    ns = sorted(set(ns))
    if any(n < 2 for n in ns):
        raise ValueError("layer counts must be at least 2")

    report = SuiteReport(0, ns, {c: CheckReport(c, CHECKS[c].audit) for c in check_ids})
    failing: dict[str, set[str]] = {c: set() for c in ("prop_2_1", "prop_2_2", "thm_2_3")}
    items = ((i, label, g, check_ids, ns) for i, (label, g) in enumerate(_corpus_items(corpus)))

    if jobs > 1:
        with Pool(jobs) as pool:
            _merge(report, pool.imap(_work, items, chunksize=64), failing)
    else:
        _merge(report, map(_work, items), failing)

    if all(c in check_ids for c in failing) and 2 in ns:
        report.consistency["kappa_triple"] = failing["thm_2_3"] == failing["prop_2_1"] | failing["prop_2_2"]
    return report


def _merge(report: SuiteReport, stream, failing: dict[str, set[str]]) -> None:
    for _index, label, g, results, witnesses, witness_failures in stream:
        report.graphs += 1
        report.witnesses_checked += witnesses
        report.witness_failures.extend(f"{label}: {msg}" for msg in witness_failures)
        elt = None
        for cid, n, outcome in results:
            rep = report.checks[cid]
            if outcome is None:
                rep.skipped += 1
                continue
            ok, detail = outcome
            rep.tested += 1
            if rep.audit:
                rep.passed += 1
                if detail is not None:
                    elt = elt or emit_elt(g)
                    rep.audit_rows.append({"graph": label, "n": n, **detail, "elt": elt})
                continue
            if ok:
                rep.passed += 1
                continue
            rep.failed += 1
            if cid in failing:
                failing[cid].add(label)
            if rep.counterexample is None:
                elt = elt or emit_elt(g)
                rep.counterexample = {"graph": label, "n": n, "elt": elt, "detail": detail}


def replay(check_id: str, elt: str, n: int):
    """Re-run a single check on a serialized graph, e.g. a reported counterexample."""
    if check_id not in CHECKS:
        raise UnknownCheck(check_id)
    return CHECKS[check_id].fn(Facts(parse_elt(elt)), n)


def probe_midband_max_lambda(corpus: CorpusSpec | Sequence[CorpusSpec]) -> list[dict]:
    """Exact max-lambda status of ``D[G]`` for every corpus graph with ``delta/2 < lambda < delta``."""
    report = run_suite(corpus, ["open_question_probe"], ns=[2])
    return report.checks["open_question_probe"].audit_rows

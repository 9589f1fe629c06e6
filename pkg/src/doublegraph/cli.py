"""``doublegraph`` command line: analyze | double | lift | verify | probe.

Exit codes: 0 success, 1 a theorem check failed (verify), 2 bad input,
3 input not Hamiltonian (lift), 4 lift construction not applicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from doublegraph import classify as cl
from doublegraph.connectivity import ConnectivityResult, edge_connectivity, vertex_connectivity
from doublegraph.graph import Graph, basic_metrics, is_connected
from doublegraph.hamilton import TooShortForLift, hamiltonian_cycle, lift_hamiltonian
from doublegraph.harness.corpus import CorpusSpec, PTooLarge, UnknownFixture
from doublegraph.harness.suite import SCHEMA, UnknownCheck, probe_midband_max_lambda, run_suite
from doublegraph.io import ParseError, emit_dot, emit_elt, read_graph
from doublegraph.product import double_n

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_NOT_HAMILTONIAN, EXIT_LIFT = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _name_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _load(args) -> Graph:
    try:
        return read_graph(args.path, graph6=getattr(args, "g6", False))
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror}") from None
    except ParseError as exc:
        raise InputError(f"parse error in {args.path}: {exc}") from None


def _witness(res: ConnectivityResult) -> list | None:
    if res.witness is None:
        return None
    return [list(m) if isinstance(m, tuple) else m for m in res.witness.members]


def analyze_report(g: Graph, name: str, ns: list[int], exact: bool = False) -> dict:
    """The ``analyze`` JSON payload; prediction entries are ``None`` when a hypothesis fails."""
    if g.p < 1:
        raise cl.EmptyGraph("graph has no vertices")
    m = basic_metrics(g)
    kres, lres = vertex_connectivity(g), edge_connectivity(g)
    k, lv = kres.value, lres.value
    t, t0 = cl.q_decompose(g)
    regime_ok = g.p >= 2 and is_connected(g)
    report = {
        "schema": SCHEMA,
        "input": name,
        "p": m.p,
        "q": m.q,
        "delta": m.delta,
        "max_degree": max(m.degrees, default=0),
        "degrees": m.degrees,
        "kappa": k,
        "kappa_witness": _witness(kres),
        "kappa_witness_absent_reason": kres.witness_absent_reason,
        "lambda": lv,
        "lambda_witness": _witness(lres),
        "floor_avg": cl.floor_avg_degree(g),
        "t": t,
        "t0": t0,
        "max_kappa": cl.is_max_kappa(g, k),
        "max_lambda": cl.is_max_lambda(g, lv),
        "lambda_regime": cl.regime_of(lv, m.delta).value if regime_ok else None,
        "window": {},
        "predictions": {},
    }
    for n in ns:
        report["window"][str(n)] = cl.window_class(g, n).value
        if g.p == 1:
            report["predictions"][str(n)] = None
            continue
        pred = {
            "kappa_double_n": cl.predict_kappa_double_n(g, n, k),
            "max_kappa_double_n": cl.predict_max_kappa_double_n(g, n, k),
            "max_lambda_double_n": cl.predict_max_lambda_double_n(g, n, lv),
            "lambda_double": cl.predict_lambda_double(g, lv) if regime_ok else None,
            "lambda_double_n_as_stated": (
                cl.predict_lambda_double_n_as_stated(g, n, lv) if regime_ok else None
            ),
            "conjectured_lambda_double_n": (
                cl.conjectured_lambda_double_n(g, n, lv) if regime_ok else None
            ),
        }
        if exact:
            d = double_n(g, n).graph
            dk, dl = vertex_connectivity(d).value, edge_connectivity(d).value
            floor_d = 2 * d.q // d.p
            pred["exact"] = {
                "kappa": dk,
                "lambda": dl,
                "floor_avg": floor_d,
                "max_kappa": dk == floor_d,
                "max_lambda": dl == floor_d,
            }
        report["predictions"][str(n)] = pred
    return report


def _format_analyze(r: dict) -> str:
    lines = [
        f"{r['input']}: p={r['p']} q={r['q']} delta={r['delta']} "
        f"kappa={r['kappa']} lambda={r['lambda']} floor(2q/p)={r['floor_avg']}",
        f"  q = {r['t']}*p + {r['t0']}   max-kappa={r['max_kappa']} max-lambda={r['max_lambda']} "
        f"regime={r['lambda_regime']}",
        f"  kappa witness={r['kappa_witness']}  lambda witness={r['lambda_witness']}",
    ]
    for n, pred in r["predictions"].items():
        lines.append(f"  n={n} window={r['window'][n]}")
        if pred is None:
            lines.append("    predictions suppressed for K1")
            continue
        for key, value in pred.items():
            lines.append(f"    {key}: {value}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    g = _load(args)
    try:
        report = analyze_report(g, Path(args.path).name, args.n, exact=args.exact)
    except cl.EmptyGraph as exc:
        raise InputError(str(exc)) from None
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_format_analyze(report))
    return EXIT_OK


def cmd_double(args) -> int:
    g = _load(args)
    if args.n < 1:
        raise InputError("-n must be at least 1")
    if g.p < 1:
        raise InputError("graph has no vertices")
    d = double_n(g, args.n)
    text = emit_dot(d.graph, name=f"D{args.n}", layers=args.n) if args.dot else emit_elt(d.graph)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lift(args) -> int:
    g = _load(args)
    if args.n < 2:
        raise InputError("-n must be at least 2")
    gamma = hamiltonian_cycle(g)
    if gamma is None:
        print(f"{args.path}: no Hamiltonian cycle", file=sys.stderr)
        return EXIT_NOT_HAMILTONIAN
    try:
        lifted = lift_hamiltonian(g, gamma, args.n)
    except TooShortForLift as exc:
        print(f"lift not applicable: {exc}", file=sys.stderr)
        return EXIT_LIFT
    if args.json:
        sys.stdout.write(json.dumps({"schema": SCHEMA, "n": args.n, "base_cycle": list(gamma), "cycle": list(lifted)}) + "\n")
    else:
        sys.stdout.write(" ".join(map(str, lifted)) + "\n")
    return EXIT_OK


def _corpora(args) -> list[CorpusSpec]:
    specs = []
    if args.pmax > 0:
        specs.append(CorpusSpec("exhaustive", args.pmin, args.pmax, args.connected_only))
    if args.random:
        count, p, m = args.random
        specs.append(CorpusSpec("random", connected_only=args.connected_only, count=count, p=p, m=m, seed=args.seed))
    if args.named:
        specs.append(CorpusSpec("named", names=tuple(args.named)))
    return specs


def cmd_verify(args) -> int:
    report = run_suite(_corpora(args), args.checks, args.n, jobs=args.jobs)
    text = report.to_json() if args.json else report.to_table()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_probe(args) -> int:
    rows = probe_midband_max_lambda(_corpora(args))
    if args.json:
        sys.stdout.write(json.dumps({"schema": SCHEMA, "rows": rows}, indent=2) + "\n")
        return EXIT_OK
    print("graph  lambda  delta  lambda_D  floor_avg_D  max_lambda_D")
    for r in rows:
        print(f"{r['graph']}  {r['lambda']}  {r['delta']}  {r['lambda_D']}  {r['floor_avg_D']}  {r['max_lambda_D']}")
    print(f"{len(rows)} MidBand graph(s)")
    return EXIT_OK


def _add_corpus_flags(sp: argparse.ArgumentParser, pmax: int, named: list[str]) -> None:
    sp.add_argument("--pmin", type=int, default=1)
    sp.add_argument("--pmax", type=int, default=pmax, help="exhaustive corpus bound (<= 8, 0 disables)")
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--random", type=_int_list, metavar="COUNT,P,M", help="add COUNT seeded G(P, M) graphs")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--named", type=_name_list, default=named, help="comma-separated fixture ids")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doublegraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="connectivity report and predictions for D_n[G]")
    sp.add_argument("path")
    sp.add_argument("--g6", action="store_true", help="input is graph6 instead of ELT")
    sp.add_argument("--n", type=_int_list, default=[2])
    sp.add_argument("--exact", action="store_true", help="also compute kappa/lambda of D_n[G]")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("double", help="emit D_n[G] as ELT or DOT")
    sp.add_argument("path")
    sp.add_argument("--g6", action="store_true")
    sp.add_argument("-n", type=int, default=2)
    sp.add_argument("-o", "--out")
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_double)

    sp = sub.add_parser("lift", help="lift a Hamiltonian cycle of G into D_n[G]")
    sp.add_argument("path")
    sp.add_argument("--g6", action="store_true")
    sp.add_argument("-n", type=int, default=2)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("verify", help="run the claim checks over a corpus")
    _add_corpus_flags(sp, pmax=5, named=[])
    sp.add_argument("--n", type=_int_list, default=[2, 3])
    sp.add_argument("--checks", type=_name_list, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("probe", help="max-lambda status of D[G] for graphs with delta/2 < lambda < delta")
    _add_corpus_flags(sp, pmax=6, named=["fig2", "fig3", "fig4", "midband_cubic8"])
    sp.set_defaults(func=cmd_probe)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "random", None) is not None and len(args.random) != 3:
        print("--random expects COUNT,P,M", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, PTooLarge, UnknownCheck, UnknownFixture, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""One predicate per claim about ``D_n[G]``, evaluated against exact computations.

A check returns ``None`` when the graph does not meet the claim's hypotheses
(counted as skipped), otherwise ``(ok, detail)``. Audit checks never fail; a
non-``None`` detail from an audit check becomes a row of its table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from doublegraph import classify as cl
from doublegraph.connectivity import (
    ConnectivityResult,
    edge_connectivity,
    verify_cut_witness,
    vertex_connectivity,
)
from doublegraph.graph import (
    Graph,
    cut_vertices_and_bridges,
    is_bipartite,
    is_connected,
    is_eulerian,
)
from doublegraph.hamilton import (
    TooShortForLift,
    hamiltonian_cycle,
    lift_hamiltonian,
    validate_spanning_cycle,
)
from doublegraph.product import LayeredGraph, double_n, kronecker, total_graph

# 2n-cycle search is exponential in n; keep it to small bases
CYCLE_CHECK_PMAX = 5


class Facts:
    """Lazily computed quantities for one base graph, shared by all checks.

    Every connectivity result is checked on creation: the witness must
    disconnect the graph and have exactly the reported size, and on connected
    graphs ``kappa <= lambda <= delta`` must hold. Violations are collected in
    ``witness_failures`` rather than raised so a sweep can finish.
    """

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._doubles: dict[int, LayeredGraph] = {}
        self._kappa: dict[int, ConnectivityResult] = {}
        self._lambda: dict[int, ConnectivityResult] = {}
        self.witnesses_checked = 0
        self.witness_failures: list[str] = []

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def nontrivial_connected(self) -> bool:
        return self.g.p >= 2 and self.connected

    @cached_property
    def delta(self) -> int:
        return self.g.min_degree()

    @cached_property
    def hamiltonian(self):
        return hamiltonian_cycle(self.g)

    def window(self, n: int) -> cl.WindowClass:
        return cl.window_class(self.g, n)

    def graph(self, n: int) -> Graph:
        """``D_n[G]`` for ``n >= 1``; ``n = 1`` is ``G`` itself."""
        if n == 1:
            return self.g
        if n not in self._doubles:
            self._doubles[n] = double_n(self.g, n)
        return self._doubles[n].graph

    def kappa(self, n: int = 1) -> int:
        if n not in self._kappa:
            self._kappa[n] = self._checked(self.graph(n), vertex_connectivity(self.graph(n)))
            self._whitney(n)
        return self._kappa[n].value

    def lam(self, n: int = 1) -> int:
        if n not in self._lambda:
            self._lambda[n] = self._checked(self.graph(n), edge_connectivity(self.graph(n)))
            self._whitney(n)
        return self._lambda[n].value

    def max_kappa(self, n: int = 1) -> bool:
        h = self.graph(n)
        return self.kappa(n) == 2 * h.q // h.p

    def max_lambda(self, n: int = 1) -> bool:
        h = self.graph(n)
        return self.lam(n) == 2 * h.q // h.p

    def regime(self) -> cl.LambdaRegime:
        return cl.regime_of(self.lam(), self.delta)

    def _checked(self, h: Graph, res: ConnectivityResult) -> ConnectivityResult:
        self.witnesses_checked += 1
        w = res.witness
        if w is None:
            ok = res.witness_absent_reason is not None and res.value == max(h.p - 1, 0) and h.is_complete()
        else:
            ok = len(w) == res.value and verify_cut_witness(h, w)
        if not ok:
            self.witness_failures.append(f"{w.kind if w else 'absent'} witness on p={h.p} value={res.value}")
        return res

    def _whitney(self, n: int) -> None:
        if n in self._kappa and n in self._lambda:
            h = self.graph(n)
            if h.p >= 2 and is_connected(h):
                k, lv = self._kappa[n].value, self._lambda[n].value
                if not k <= lv <= h.min_degree():
                    self.witness_failures.append(f"Whitney chain broken at n={n}: {k}, {lv}, {h.min_degree()}")


CheckFn = Callable[[Facts, int], "tuple[bool, dict | None] | None"]


@dataclass(frozen=True)
class Check:
    fn: CheckFn
    audit: bool = False
    only_n: int | None = None  # run only for this layer count


def _layers_connected(f: Facts, n: int):
    g = f.g
    if g.p == 1:
        return None
    ok = is_connected(f.graph(n)) == f.connected
    return ok, {"G_connected": f.connected}


def _lemma_1_2(f: Facts, n: int):
    g, h = f.g, f.graph(n)
    same = h == kronecker(g, total_graph(n))
    degs = all(h.degree(i * g.p + u) == n * g.degree(u) for i in range(n) for u in range(g.p))
    ok = same and h.p == n * g.p and h.q == n * n * g.q and degs
    return ok, {"p": h.p, "q": h.q, "matches_kronecker": same}


def _kappa_scaling(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    k, kd = f.kappa(), f.kappa(n)
    return kd == n * k, {"kappa": k, "kappa_D": kd}


def _pairs_on_cycles(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    # a graph on >= 3 vertices is 2-connected iff every pair lies on a common cycle
    h = f.graph(n)
    kd = f.kappa(n)
    return h.p >= 3 and kd >= 2, {"kappa_D": kd}


def _edges_on_2n_cycles(f: Facts, n: int):
    if not f.nontrivial_connected or f.g.p > CYCLE_CHECK_PMAX:
        return None
    h = f.graph(n)
    for x, y in h.edges:
        if not edge_on_cycle_of_length(h, x, y, 2 * n):
            return False, {"edge": [x, y]}
    return True, {}


def _no_cut_vertex_or_bridge(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    cuts, bridges = cut_vertices_and_bridges(f.graph(n))
    return not cuts and not bridges, {"cut_vertices": cuts, "bridges": [list(e) for e in bridges]}


def _block(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    h = f.graph(n)
    cuts, _ = cut_vertices_and_bridges(h)
    return is_connected(h) and not cuts, {"cut_vertices": cuts}


def _bipartite(f: Facts, n: int):
    a, b = is_bipartite(f.g), is_bipartite(f.graph(n))
    return a == b, {"G": a, "D": b}


def _eulerian(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    a, b = is_eulerian(f.g), is_eulerian(f.graph(n))
    return b == (a or n % 2 == 0), {"G": a, "D": b}


def _hamiltonian_lift(f: Facts, n: int):
    gamma = f.hamiltonian
    if not f.nontrivial_connected or gamma is None:
        return None
    try:
        lifted = lift_hamiltonian(f.g, gamma, n)
    except TooShortForLift:
        fallback = hamiltonian_cycle(f.graph(n))
        return fallback is not None, {"lift": "TooShortForLift", "fallback_found": fallback is not None}
    except AssertionError as exc:
        return False, {"lift": str(exc)}
    ok = len(lifted) == n * f.g.p and validate_spanning_cycle(f.graph(n), lifted)
    return ok, {"length": len(lifted)}


def _max_kappa_row(f: Facts, n: int) -> dict:
    return {
        "max_kappa_G": f.max_kappa(),
        "max_kappa_D": f.max_kappa(n),
        "window": f.window(n).value,
        "kappa": f.kappa(),
        "kappa_D": f.kappa(n),
    }


def _prop_2_1(f: Facts, n: int):
    if not f.nontrivial_connected or not f.max_kappa() or f.window(n) is cl.WindowClass.OUTSIDE:
        return None
    return f.max_kappa(n), _max_kappa_row(f, n)


def _prop_2_2(f: Facts, n: int):
    if not f.nontrivial_connected or f.max_kappa():
        return None
    return not f.max_kappa(n), _max_kappa_row(f, n)


def _max_kappa_iff(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    predicted = f.max_kappa() and f.window(n) is not cl.WindowClass.OUTSIDE
    return f.max_kappa(n) == predicted, _max_kappa_row(f, n)


def _lambda_row(f: Facts, n: int) -> dict:
    return {"lambda": f.lam(), "delta": f.delta, "lambda_D": f.lam(n)}


def _fact_1(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    return f.lam(n) >= 2, _lambda_row(f, n)


def _fact_2(f: Facts, n: int):
    if not f.nontrivial_connected or f.delta != 1:
        return None
    return f.lam(n) == 2, _lambda_row(f, n)


def _prop_3_1(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    return f.lam(n) >= 2 * f.lam(), _lambda_row(f, n)


def _cor_3_2(f: Facts, n: int):
    if not f.nontrivial_connected or f.lam() != f.delta:
        return None
    return f.lam(n) == 2 * f.lam(), _lambda_row(f, n)


def _prop_3_3(f: Facts, n: int):
    if not f.nontrivial_connected or f.lam() == f.delta:
        return None
    expected = 4 * f.lam() if 2 * f.lam() <= f.delta else 2 * f.delta
    return f.lam(n) == expected, {**_lambda_row(f, n), "expected": expected}


def _thm_3_4(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    piecewise = cl.predict_lambda_double(f.g, f.lam())
    min_form = cl.min_form_lambda_double(f.g, f.lam())
    exact = f.lam(n)
    return exact == piecewise == min_form, {
        **_lambda_row(f, n),
        "regime": f.regime().value,
        "piecewise": piecewise,
        "min_form": min_form,
    }


def _max_lambda_row(f: Facts, n: int) -> dict:
    h = f.graph(n)
    return {
        **_lambda_row(f, n),
        "max_lambda_G": f.max_lambda(),
        "max_lambda_D": f.max_lambda(n),
        "floor_avg_D": 2 * h.q // h.p,
        "window": f.window(n).value,
    }


def _prop_3_5(f: Facts, n: int):
    if (
        not f.nontrivial_connected
        or not f.max_lambda()
        or f.window(n) is cl.WindowClass.OUTSIDE
        or f.lam(n) != 2 * f.lam()
    ):
        return None
    return f.max_lambda(n), _max_lambda_row(f, n)


def _prop_3_6_vacuity(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    if f.max_lambda() and (2 * f.lam() <= f.delta or f.lam(n) == 4 * f.lam()):
        return True, _max_lambda_row(f, n)
    return True, None


def _prop_3_7(f: Facts, n: int):
    if not f.nontrivial_connected or f.max_lambda():
        return None
    return not f.max_lambda(n), _max_lambda_row(f, n)


def _max_lambda_iff(f: Facts, n: int):
    if not f.nontrivial_connected or f.lam(n) != n * f.lam():
        return None
    predicted = f.max_lambda() and f.window(n) is not cl.WindowClass.OUTSIDE
    return f.max_lambda(n) == predicted, _max_lambda_row(f, n)


def _max_lambda_iff_unrestricted(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    predicted = f.max_lambda() and f.window(n) is not cl.WindowClass.OUTSIDE
    if f.max_lambda(n) == predicted:
        return True, None
    return True, {**_max_lambda_row(f, n), "predicted": predicted, "restricted": f.lam(n) == n * f.lam()}


def _thm_3_9_audit(f: Facts, n: int):
    if not f.nontrivial_connected:
        return None
    exact = f.lam(n)
    stated = cl.predict_lambda_double_n_as_stated(f.g, n, f.lam())
    conjectured = cl.conjectured_lambda_double_n(f.g, n, f.lam())
    if stated == exact and conjectured == exact:
        return True, None
    return True, {
        **_lambda_row(f, n),
        "regime": f.regime().value,
        "as_stated": stated,
        "conjectured": conjectured,
        "exact": exact,
        "conjecture_holds": conjectured == exact,
    }


def _open_question_probe(f: Facts, n: int):
    if not f.nontrivial_connected or f.regime() is not cl.LambdaRegime.MID_BAND:
        return None
    return True, _max_lambda_row(f, n)


CHECKS: dict[str, Check] = {
    "lemma_1_2": Check(_lemma_1_2),
    "prop_1_1": Check(_kappa_scaling, only_n=2),
    "prop_1_3_1": Check(_layers_connected),
    "prop_1_3_2": Check(_pairs_on_cycles),
    "prop_1_3_3": Check(_edges_on_2n_cycles),
    "prop_1_3_4": Check(_no_cut_vertex_or_bridge),
    "prop_1_3_5": Check(_block),
    "prop_1_4": Check(_bipartite),
    "prop_1_5_1": Check(_eulerian),
    "prop_1_5_2": Check(_hamiltonian_lift),
    "prop_1_6": Check(_kappa_scaling),
    "prop_2_1": Check(_prop_2_1, only_n=2),
    "prop_2_2": Check(_prop_2_2, only_n=2),
    "thm_2_3": Check(_max_kappa_iff, only_n=2),
    "thm_2_4": Check(_max_kappa_iff),
    "fact_1": Check(_fact_1, only_n=2),
    "fact_2": Check(_fact_2, only_n=2),
    "prop_3_1": Check(_prop_3_1, only_n=2),
    "cor_3_2": Check(_cor_3_2, only_n=2),
    "prop_3_3": Check(_prop_3_3, only_n=2),
    "thm_3_4": Check(_thm_3_4, only_n=2),
    "prop_3_5": Check(_prop_3_5, only_n=2),
    "prop_3_6_vacuity_audit": Check(_prop_3_6_vacuity, audit=True, only_n=2),
    "prop_3_7": Check(_prop_3_7, only_n=2),
    "thm_3_8": Check(_max_lambda_iff, only_n=2),
    "thm_3_9_audit": Check(_thm_3_9_audit, audit=True),
    "thm_3_10": Check(_max_lambda_iff),
    "thm_3_10_unrestricted_audit": Check(_max_lambda_iff_unrestricted, audit=True),
    "open_question_probe": Check(_open_question_probe, audit=True, only_n=2),
}


def edge_on_cycle_of_length(h: Graph, x: int, y: int, length: int) -> bool:
    """Is there a simple cycle of exactly ``length`` edges through edge ``xy``?"""
    adj = h.adj_mask
    target_steps = length - 1  # edges on the y -> x path

    def walk(v: int, used: int, steps: int) -> bool:
        if steps == target_steps - 1:
            return bool(adj[v] >> x & 1)
        cand = adj[v] & ~used
        while cand:
            b = cand & -cand
            cand ^= b
            if walk(b.bit_length() - 1, used | b, steps + 1):
                return True
        return False

    if length < 3:
        return False
    return walk(y, (1 << x) | (1 << y), 0)

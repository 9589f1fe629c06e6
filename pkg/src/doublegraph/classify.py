"""Average-degree arithmetic, max-connectivity predicates and predicted values for doubles.

Every comparison is done on cross-multiplied integers; nothing here touches
floating point.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from doublegraph.connectivity import edge_connectivity, vertex_connectivity
from doublegraph.graph import Graph, is_connected


class ClassifyError(ValueError):
    pass


class EmptyGraph(ClassifyError):
    pass


class DisconnectedInput(ClassifyError):
    pass


class TrivialGraph(ClassifyError):
    pass


class QDecomposition(NamedTuple):
    t: int
    t0: int


class WindowClass(str, Enum):
    LOW = "LowWindow"
    MID = "MidWindow"
    OUTSIDE = "Outside"


class LambdaRegime(str, Enum):
    EQUAL = "Equal"
    LOW_HALF = "LowHalf"
    MID_BAND = "MidBand"


def _need_vertices(g: Graph) -> None:
    if g.p < 1:
        raise EmptyGraph("operation needs p >= 1")


def _need_connected(g: Graph) -> None:
    _need_vertices(g)
    if g.p == 1:
        raise TrivialGraph("K1 has no edge connectivity regime")
    if not is_connected(g):
        raise DisconnectedInput("operation needs a connected graph")


def floor_avg_degree(g: Graph) -> int:
    _need_vertices(g)
    return 2 * g.q // g.p


def q_decompose(g: Graph) -> QDecomposition:
    _need_vertices(g)
    return QDecomposition(*divmod(g.q, g.p))


def kappa(g: Graph) -> int:
    return vertex_connectivity(g).value


def lam(g: Graph) -> int:
    return edge_connectivity(g).value


def is_max_kappa(g: Graph, kappa_value: int | None = None) -> bool:
    _need_vertices(g)
    k = kappa(g) if kappa_value is None else kappa_value
    return k == floor_avg_degree(g)


def is_max_lambda(g: Graph, lambda_value: int | None = None) -> bool:
    _need_vertices(g)
    lv = lam(g) if lambda_value is None else lambda_value
    return lv == floor_avg_degree(g)


def window_of(p: int, t0: int, n: int) -> WindowClass:
    if 2 * n * t0 < p:
        return WindowClass.LOW
    if 2 * t0 >= p and 2 * n * t0 < (n + 1) * p:
        return WindowClass.MID
    return WindowClass.OUTSIDE


def window_class(g: Graph, n: int) -> WindowClass:
    """Where the remainder ``t0`` of ``q = t*p + t0`` falls for layer count ``n``.

    The two good windows are ``t0 < p/(2n)`` and ``p/2 <= t0 < p(n+1)/(2n)``,
    exactly the remainders for which the fractional part of ``2q/p`` is
    below ``1/n``.
    """
    if n < 2:
        raise ValueError("window classes are defined for n >= 2")
    return window_of(g.p, q_decompose(g).t0, n)


def predict_kappa_double_n(g: Graph, n: int, kappa_value: int | None = None) -> int:
    return n * (kappa(g) if kappa_value is None else kappa_value)


def predict_max_kappa_double_n(g: Graph, n: int, kappa_value: int | None = None) -> bool:
    return is_max_kappa(g, kappa_value) and window_class(g, n) is not WindowClass.OUTSIDE


def regime_of(lambda_value: int, delta: int) -> LambdaRegime:
    if lambda_value == delta:
        return LambdaRegime.EQUAL
    if 2 * lambda_value <= delta:
        return LambdaRegime.LOW_HALF
    return LambdaRegime.MID_BAND


def lambda_regime(g: Graph, lambda_value: int | None = None) -> LambdaRegime:
    _need_connected(g)
    return regime_of(lam(g) if lambda_value is None else lambda_value, g.min_degree())


def _lambda_delta(g: Graph, lambda_value: int | None) -> tuple[int, int]:
    _need_connected(g)
    return (lam(g) if lambda_value is None else lambda_value), g.min_degree()


def predict_lambda_double(g: Graph, lambda_value: int | None = None) -> int:
    """Piecewise value of lambda(D[G]) by regime."""
    lv, delta = _lambda_delta(g, lambda_value)
    regime = regime_of(lv, delta)
    if regime is LambdaRegime.EQUAL:
        return 2 * lv
    if regime is LambdaRegime.LOW_HALF:
        return 4 * lv
    return 2 * delta


def min_form_lambda_double(g: Graph, lambda_value: int | None = None) -> int:
    lv, delta = _lambda_delta(g, lambda_value)
    return min(2 * delta, 4 * lv)


def predict_lambda_double_n_as_stated(g: Graph, n: int, lambda_value: int | None = None) -> int:
    """The three-case general-``n`` formula transcribed literally.

    Known to disagree with the exact value (for instance ``2n*delta`` in the
    middle band already overshoots at ``n = 2``); used only for auditing.
    """
    lv, delta = _lambda_delta(g, lambda_value)
    regime = regime_of(lv, delta)
    if regime is LambdaRegime.EQUAL:
        return n * lv
    if regime is LambdaRegime.LOW_HALF:
        return n * n * lv
    return 2 * n * delta


def conjectured_lambda_double_n(g: Graph, n: int, lambda_value: int | None = None) -> int:
    """``min(n*delta, n^2*lambda)``: isolate one vertex's copies, or blow up a minimum edge cut."""
    lv, delta = _lambda_delta(g, lambda_value)
    return min(n * delta, n * n * lv)


def predict_max_lambda_double_n(g: Graph, n: int, lambda_value: int | None = None) -> bool:
    return is_max_lambda(g, lambda_value) and window_class(g, n) is not WindowClass.OUTSIDE

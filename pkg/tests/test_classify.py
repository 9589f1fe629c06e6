from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path, star
from doublegraph import classify as cl
from doublegraph.classify import LambdaRegime, WindowClass
from doublegraph.connectivity import edge_connectivity
from doublegraph.graph import Graph, graph_from_edge_list
from doublegraph.product import double_n
from oracles import brute_lambda


def test_floor_avg_degree(fig3):
    assert cl.floor_avg_degree(cycle(5)) == 2
    assert cl.floor_avg_degree(star(4)) == 1
    assert (fig3.p, fig3.q) == (8, 13)
    assert cl.floor_avg_degree(fig3) == 3
    with pytest.raises(cl.EmptyGraph):
        cl.floor_avg_degree(Graph(0))


def test_q_decompose():
    assert cl.q_decompose(cycle(5)) == (1, 0)
    assert cl.q_decompose(complete(4)) == (1, 2)
    assert cl.q_decompose(star(4)) == (0, 3)


def test_max_kappa_examples(fig3):
    for k in (3, 4, 5, 6, 7):
        assert cl.is_max_kappa(cycle(k))
    for k in (2, 3, 4, 5, 6):
        assert cl.is_max_kappa(path(k))
        assert cl.is_max_kappa(star(k))
    assert not cl.is_max_kappa(fig3)


def test_window_examples():
    assert cl.window_class(cycle(5), 2) is WindowClass.LOW
    assert cl.window_class(complete(4), 2) is WindowClass.MID
    assert cl.window_class(star(4), 2) is WindowClass.OUTSIDE


@given(st.integers(1, 40), st.data(), st.integers(2, 6))
def test_window_matches_floor_scaling(p, data, n):
    # good window <=> floor(2nq/p) == n*floor(2q/p), i.e. frac(2q/p) < 1/n
    q = data.draw(st.integers(0, p * (p - 1) // 2))
    t0 = q % p
    good = cl.window_of(p, t0, n) is not WindowClass.OUTSIDE
    frac = Fraction(2 * q, p) - (2 * q // p)
    assert good == (frac < Fraction(1, n))
    assert good == ((2 * n * q) // p == n * ((2 * q) // p))


@given(st.integers(1, 60), st.data())
def test_n2_windows_are_quarters(p, data):
    t0 = data.draw(st.integers(0, p - 1))
    f = Fraction(t0, p)
    expected = f < Fraction(1, 4) or Fraction(1, 2) <= f < Fraction(3, 4)
    assert (cl.window_of(p, t0, 2) is not WindowClass.OUTSIDE) == expected


def test_kappa_predictions():
    assert cl.predict_kappa_double_n(cycle(5), 2) == 4
    assert cl.predict_kappa_double_n(path(4), 3) == 3
    assert cl.predict_kappa_double_n(complete(4), 2) == 6


def test_max_kappa_predictions():
    assert cl.predict_max_kappa_double_n(cycle(5), 2)
    assert not cl.predict_max_kappa_double_n(star(4), 2)
    assert not cl.predict_max_kappa_double_n(path(4), 2)


def test_regimes(fig3, fig4):
    assert cl.lambda_regime(cycle(6)) is LambdaRegime.EQUAL
    assert cl.lambda_regime(fig3) is LambdaRegime.LOW_HALF
    assert cl.lambda_regime(fig4) is LambdaRegime.MID_BAND
    with pytest.raises(cl.DisconnectedInput):
        cl.lambda_regime(graph_from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(cl.TrivialGraph):
        cl.lambda_regime(Graph(1))


def test_lambda_double_predictions(fig2, fig4):
    assert cl.predict_lambda_double(path(5)) == 2
    assert cl.predict_lambda_double(star(6)) == 2
    assert cl.predict_lambda_double(fig2) == 4
    assert cl.predict_lambda_double(fig4) == 8
    with pytest.raises(cl.DisconnectedInput):
        cl.predict_lambda_double(graph_from_edge_list(3, [(0, 1)]))


def test_as_stated_formula(fig2, fig4):
    assert cl.predict_lambda_double_n_as_stated(cycle(6), 3) == 6
    assert cl.predict_lambda_double_n_as_stated(fig2, 3) == 9
    assert cl.predict_lambda_double_n_as_stated(fig4, 2) == 16
    assert cl.predict_lambda_double(fig4) == 8


def test_conjectured_formula(fig2):
    d3 = double_n(fig2, 3).graph
    assert cl.conjectured_lambda_double_n(fig2, 3) == 6 == brute_lambda(d3.p, d3.edges)
    c = double_n(cycle(6), 3).graph
    assert cl.conjectured_lambda_double_n(cycle(6), 3) == 6 == brute_lambda(c.p, c.edges)


@given(graphs(min_p=2, max_p=7, connected=True))
def test_conjecture_at_n2_is_piecewise(g):
    lam = edge_connectivity(g).value
    assert cl.conjectured_lambda_double_n(g, 2, lam) == cl.predict_lambda_double(g, lam)
    assert cl.min_form_lambda_double(g, lam) == cl.predict_lambda_double(g, lam)


def test_max_lambda_predictions():
    # oracle: lambda(D[C5]) = 4 = floor(2*20/10), lambda(D[K4]) = 6 = floor(48/8)
    d = double_n(cycle(5), 2).graph
    assert brute_lambda(d.p, d.edges) == 4 == 2 * d.q // d.p
    assert cl.predict_max_lambda_double_n(cycle(5), 2)
    d = double_n(complete(4), 2).graph
    assert brute_lambda(d.p, d.edges) == 6 == 2 * d.q // d.p
    assert cl.predict_max_lambda_double_n(complete(4), 2)
    d = double_n(path(4), 2).graph
    assert brute_lambda(d.p, d.edges) == 2 < 2 * d.q // d.p == 3
    assert not cl.predict_max_lambda_double_n(path(4), 2)

import pytest
from hypothesis import given

from conftest import graphs
from doublegraph.graph import Graph
from doublegraph.harness.corpus import enumerate_labeled_graphs, named_fixture
from doublegraph.io import ParseError, emit_dot, emit_elt, parse_elt, parse_graph6


def test_emit_is_canonical():
    g = parse_elt("# triangle\n3 3\n\n2 1\n0 2\n1 0\n")
    assert emit_elt(g) == "3 3\n0 1\n0 2\n1 2\n"


def test_empty_graphs():
    assert emit_elt(Graph(1)) == "1 0\n"
    assert parse_elt("0 0\n") == Graph(0)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3 2\n0 1\n",
        "3 1\n0 1 2\n",
        "3 1\nx y\n",
        "3 1\n0 0\n",
        "3 2\n0 1\n1 0\n",
        "2 1\n0 5\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_elt(text)


@given(graphs())
def test_round_trip_random(g):
    assert parse_elt(emit_elt(g)) == g


def test_round_trip_small_corpus():
    for p in range(1, 6):
        for g in enumerate_labeled_graphs(p):
            assert parse_elt(emit_elt(g)) == g


@pytest.mark.parametrize(
    "record, p, edges",
    [
        ("A_", 2, [(0, 1)]),
        ("A?", 2, []),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        (">>graph6<<Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("Dhc", 5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]),
    ],
)
def test_graph6_known_records(record, p, edges):
    g = parse_graph6(record)
    assert (g.p, list(g.edges)) == (p, edges)


def test_graph6_petersen():
    # canonical record from the graph6 format description
    assert parse_graph6("IheA@GUAo").q == 15


def test_graph6_rejects_truncation():
    with pytest.raises(ParseError):
        parse_graph6("Dh")


def test_dot_is_deterministic():
    g = named_fixture("cycle_4")
    text = emit_dot(g)
    assert text == emit_dot(g)
    assert text.startswith("graph G {") and "0 -- 1;" in text
    layered = emit_dot(Graph(4, ((0, 3), (1, 2))), layers=2)
    assert "cluster_1" in layered and '3 [label="(1,1)"]' in layered


def test_graph6_long_size_header():
    # p = 70 = 1*64 + 6 needs the four-byte form
    record = "~" + chr(63) + chr(64) + chr(69) + "?" * ((70 * 69 // 2 + 5) // 6)
    g = parse_graph6(record)
    assert (g.p, g.q) == (70, 0)

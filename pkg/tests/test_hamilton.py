import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path
from doublegraph.graph import Graph
from doublegraph.harness.corpus import named_fixture
from doublegraph.hamilton import (
    NotSpanningCycle,
    TooShortForLift,
    hamiltonian_cycle,
    lift_hamiltonian,
    validate_spanning_cycle,
)
from doublegraph.product import double_n
from oracles import brute_hamiltonian


def test_search_examples():
    assert hamiltonian_cycle(cycle(4)) == (0, 1, 2, 3)
    assert hamiltonian_cycle(path(3)) is None
    assert hamiltonian_cycle(named_fixture("petersen")) is None
    assert hamiltonian_cycle(complete(2)) is None


def test_validate_examples():
    assert validate_spanning_cycle(cycle(4), (0, 1, 2, 3))
    assert not validate_spanning_cycle(cycle(4), (0, 2, 1, 3))
    assert not validate_spanning_cycle(complete(4), (0, 1, 2))
    assert not validate_spanning_cycle(complete(3), (0, 1, 1))


@settings(max_examples=150)
@given(graphs(max_p=7))
def test_search_agrees_with_permutation_oracle(g):
    found = hamiltonian_cycle(g)
    assert (found is not None) == brute_hamiltonian(g.p, g.edges)
    if found is not None:
        assert validate_spanning_cycle(g, found)


@pytest.mark.parametrize("k, n", [(4, 2), (5, 3), (3, 2), (6, 4), (5, 5)])
def test_lift_cycles(k, n):
    g = cycle(k)
    lifted = lift_hamiltonian(g, hamiltonian_cycle(g), n)
    assert len(lifted) == n * k
    assert validate_spanning_cycle(double_n(g, n).graph, lifted)


def test_lift_triangle_needs_two_layers():
    with pytest.raises(TooShortForLift):
        lift_hamiltonian(cycle(3), (0, 1, 2), 3)
    for n in (3, 4):
        assert hamiltonian_cycle(double_n(cycle(3), n).graph) is not None


def test_lift_rejects_non_cycles():
    with pytest.raises(NotSpanningCycle):
        lift_hamiltonian(cycle(4), (0, 2, 1, 3), 2)
    with pytest.raises(NotSpanningCycle):
        lift_hamiltonian(Graph(1), (0,), 2)


@settings(max_examples=100)
@given(graphs(min_p=4, max_p=7), st.integers(2, 6), st.data())
def test_lift_from_any_rotation(g, n, data):
    gamma = hamiltonian_cycle(g)
    if gamma is None:
        return
    shift = data.draw(st.integers(0, g.p - 1))
    if data.draw(st.booleans()):
        gamma = gamma[::-1]
    gamma = gamma[shift:] + gamma[:shift]
    lifted = lift_hamiltonian(g, gamma, n)
    assert len(set(lifted)) == n * g.p
    assert validate_spanning_cycle(double_n(g, n).graph, lifted)

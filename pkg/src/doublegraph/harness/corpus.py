"""Graph corpora: exhaustive labeled enumeration, seeded random graphs, named fixtures."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from doublegraph.graph import Graph, components, graph_from_edge_list

P_CAP = 8


class PTooLarge(ValueError):
    pass


class TooManyEdges(ValueError):
    pass


class UnknownFixture(KeyError):
    pass


def enumerate_labeled_graphs(p: int, connected_only: bool = False) -> Iterator[Graph]:
    """All ``2**(p(p-1)/2)`` labeled graphs on ``p`` vertices in edge-mask order.

    Bit ``k`` of the mask selects the ``k``-th pair of
    ``itertools.combinations(range(p), 2)``.
    """
    if p > P_CAP:
        raise PTooLarge(f"exhaustive enumeration is capped at p = {P_CAP}, got {p}")
    if p < 1:
        raise PTooLarge(f"p must be at least 1, got {p}")
    pairs = list(combinations(range(p), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(p, tuple(e for k, e in enumerate(pairs) if mask >> k & 1))
        if connected_only and len(components(g)) > 1:
            continue
        yield g


def random_graph(p: int, m: int, seed: int) -> Graph:
    pairs = list(combinations(range(p), 2))
    if not 0 <= m <= len(pairs):
        raise TooManyEdges(f"{m} edges do not fit on {p} vertices")
    rng = random.Random(seed)
    return Graph(p, tuple(sorted(rng.sample(pairs, m))))


def _complete(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def _fixed_fixtures() -> dict[str, Graph]:
    fig2 = _complete(range(3)) + _complete(range(3, 6)) + [(2, 3)]
    fig3 = _complete(range(4)) + _complete(range(4, 8)) + [(3, 4)]
    fig4 = _complete(range(5)) + _complete(range(5, 10)) + [(0, 5), (1, 6), (2, 7)]
    petersen = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    # two copies of K4 minus an edge, joined into a cubic graph by a 2-edge cut
    cubic8 = (
        [e for e in _complete(range(4)) if e != (2, 3)]
        + [e for e in _complete(range(4, 8)) if e != (6, 7)]
        + [(2, 6), (3, 7)]
    )
    return {
        "fig2": graph_from_edge_list(6, fig2),
        "fig3": graph_from_edge_list(8, fig3),
        "fig4": graph_from_edge_list(10, fig4),
        "petersen": graph_from_edge_list(10, petersen),
        "midband_cubic8": graph_from_edge_list(8, cubic8),
    }


FIXED_FIXTURES = _fixed_fixtures()
_FAMILY = re.compile(r"^(path|cycle|star|complete)_(\d+)$")


def named_fixture(name: str) -> Graph:
    """Worked-example graphs, Petersen, and the families ``path_k``, ``cycle_k``, ``star_k``, ``complete_k``.

    ``k`` is always the vertex count, so ``star_4`` is ``K_{1,3}``.
    """
    if name in FIXED_FIXTURES:
        return FIXED_FIXTURES[name]
    m = _FAMILY.match(name)
    if not m:
        raise UnknownFixture(name)
    family, k = m.group(1), int(m.group(2))
    if k < 1 or (family == "cycle" and k < 3):
        raise UnknownFixture(f"{name}: size out of range")
    if family == "path":
        edges = [(i, i + 1) for i in range(k - 1)]
    elif family == "cycle":
        edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    elif family == "star":
        edges = [(0, i) for i in range(1, k)]
    else:
        edges = _complete(range(k))
    return graph_from_edge_list(k, edges)


@dataclass(frozen=True)
class CorpusSpec:
    mode: Literal["exhaustive", "random", "named"] = "exhaustive"
    p_min: int = 1
    p_max: int = 5
    connected_only: bool = False
    count: int = 0
    p: int = 0
    m: int = 0
    seed: int = 0
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.mode == "exhaustive" and self.p_max > P_CAP:
            raise PTooLarge(f"exhaustive corpora are capped at p = {P_CAP}, got {self.p_max}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seeds are unsigned 64-bit integers")


def iter_corpus(spec: CorpusSpec) -> Iterator[tuple[str, Graph]]:
    """Yield ``(label, graph)`` pairs in a fixed order."""
    if spec.mode == "exhaustive":
        for p in range(max(spec.p_min, 1), spec.p_max + 1):
            for k, g in enumerate(enumerate_labeled_graphs(p)):
                if spec.connected_only and len(components(g)) > 1:
                    continue
                yield f"p{p}#{k}", g
    elif spec.mode == "random":
        rng = random.Random(spec.seed)
        for i in range(spec.count):
            g = random_graph(spec.p, spec.m, rng.getrandbits(64))
            if spec.connected_only and len(components(g)) > 1:
                continue
            yield f"rand{i}", g
    elif spec.mode == "named":
        for name in spec.names:
            g = named_fixture(name)
            if spec.connected_only and len(components(g)) > 1:
                continue
            yield name, g
    else:
        raise ValueError(f"unknown corpus mode {spec.mode!r}")

"""Total graphs, Kronecker products with loop-bearing factors, and layered doubles.

Vertices of a product are numbered layer-major: the copy of base vertex
``u`` in layer ``i`` gets id ``i * p + u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from doublegraph.graph import Edge, Graph


class ProductError(ValueError):
    pass


class ZeroOrder(ProductError):
    pass


class EmptyFactor(ProductError):
    pass


class LayerOutOfRange(ProductError):
    pass


class NotDouble(ProductError):
    pass


@dataclass(frozen=True)
class ReflexiveGraph:
    """A simple graph that may additionally carry a loop at some vertices."""

    p: int
    edges: tuple[Edge, ...] = ()
    loops: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if any(not 0 <= v < self.p for v in self.loops):
            raise ProductError("loop on a vertex outside the graph")
        if any(not 0 <= u < v < self.p for u, v in self.edges):
            raise ProductError("edges must be normalized pairs u < v inside the graph")

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            return a in self.loops
        return (min(a, b), max(a, b)) in self.edges


def total_graph(n: int) -> ReflexiveGraph:
    """``K_n`` with a loop at every vertex."""
    if n < 1:
        raise ZeroOrder("total graph needs at least one vertex")
    return ReflexiveGraph(n, tuple(combinations(range(n), 2)), frozenset(range(n)))


def kronecker(g: Graph, h: ReflexiveGraph) -> Graph:
    """Tensor product; ``(u, a) ~ (v, b)`` iff ``u ~ v`` in ``g`` and ``a ~ b`` in ``h``."""
    if g.p < 1 or h.p < 1:
        raise EmptyFactor("both factors need at least one vertex")
    p = g.p
    pairs = [(a, a) for a in sorted(h.loops)]
    pairs += [(a, b) for a, b in h.edges] + [(b, a) for a, b in h.edges]
    edges = set()
    for u, v in g.edges:
        for a, b in pairs:
            x, y = a * p + u, b * p + v
            edges.add((x, y) if x < y else (y, x))
    return Graph(g.p * h.p, tuple(sorted(edges)))


@dataclass(frozen=True)
class LayeredGraph:
    base: Graph
    n: int
    graph: Graph

    def vid(self, u: int, i: int) -> int:
        return i * self.base.p + u

    def split(self, x: int) -> tuple[int, int]:
        """Inverse of :meth:`vid`: ``(base vertex, layer)``."""
        i, u = divmod(x, self.base.p)
        return u, i


def double_n(g: Graph, n: int) -> LayeredGraph:
    """``G x T_n`` built directly from the layer rule; ``n = 2`` is the double graph."""
    if g.p < 1:
        raise EmptyFactor("base graph needs at least one vertex")
    if n < 1:
        raise ZeroOrder("layer count must be positive")
    p = g.p
    edges = []
    for u, v in g.edges:
        for i in range(n):
            for j in range(n):
                x, y = i * p + u, j * p + v
                edges.append((x, y) if x < y else (y, x))
    return LayeredGraph(g, n, Graph(n * p, tuple(sorted(edges))))


def double(g: Graph) -> LayeredGraph:
    return double_n(g, 2)


def layer_subgraph(d: LayeredGraph, i: int) -> Graph:
    if not 0 <= i < d.n:
        raise LayerOutOfRange(f"layer {i} not in 0..{d.n - 1}")
    p = d.base.p
    lo, hi = i * p, (i + 1) * p
    edges = tuple((u - lo, v - lo) for u, v in d.graph.edges if lo <= u < hi and lo <= v < hi)
    return Graph(p, edges)


def cross_layer_subgraph(d: LayeredGraph) -> Graph:
    """The spanning copy of ``G x K_2`` inside ``D[G]``: only edges between layers 0 and 1."""
    if d.n != 2:
        raise NotDouble(f"cross-layer subgraph is defined for n = 2, got n = {d.n}")
    p = d.base.p
    edges = tuple((u, v) for u, v in d.graph.edges if u < p <= v)
    return Graph(2 * p, edges)

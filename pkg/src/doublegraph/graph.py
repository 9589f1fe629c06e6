"""Finite simple undirected graphs on dense vertex ids ``0..p-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Base class for malformed graph input."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``edges`` is sorted with every pair stored as ``u < v``.

    Build instances through :func:`graph_from_edge_list` unless the edge
    tuple is already normalized.
    """

    p: int
    edges: tuple[Edge, ...] = ()

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.p)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        masks = [0] * self.p
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(n) for n in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return self.q == self.p * (self.p - 1) // 2

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        """Delete vertices and relabel the survivors densely, preserving order."""
        gone = set(removed)
        keep = [u for u in range(self.p) if u not in gone]
        index = {u: i for i, u in enumerate(keep)}
        edges = tuple(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(keep), edges)

    def remove_edges(self, removed: Iterable[Edge]) -> Graph:
        gone = {_norm(u, v) for u, v in removed}
        return Graph(self.p, tuple(e for e in self.edges if e not in gone))


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def graph_from_edge_list(p: int, pairs: Iterable[Edge]) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    >>> graph_from_edge_list(3, [(1, 0), (2, 1)]).edges
    ((0, 1), (1, 2))
    """
    if p < 0:
        raise VertexOutOfRange(f"negative vertex count {p}")
    seen: set[Edge] = set()
    for u, v in pairs:
        if not (0 <= u < p and 0 <= v < p):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{p - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
    return Graph(p, tuple(sorted(seen)))


class BasicMetrics(NamedTuple):
    p: int
    q: int
    degrees: list[int]
    delta: int


def basic_metrics(g: Graph) -> BasicMetrics:
    degs = g.degrees()
    return BasicMetrics(g.p, g.q, degs, min(degs, default=0))


def components(g: Graph, alive: int | None = None) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member.

    ``alive`` restricts the search to the vertices whose bits are set.
    """
    if alive is None:
        alive = (1 << g.p) - 1
    adj = g.adj_mask
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    # p = 0 and K1 are both treated as connected
    return len(components(g)) <= 1


def is_connected_without(g: Graph, removed_mask: int) -> bool:
    """Connectivity of ``g`` minus the vertices in ``removed_mask``."""
    return len(components(g, ((1 << g.p) - 1) & ~removed_mask)) <= 1


def cut_vertices_and_bridges(g: Graph) -> tuple[list[int], list[Edge]]:
    """Articulation points and bridges by iterative DFS low-links."""
    p = g.p
    adj = g.adj
    disc = [-1] * p
    low = [0] * p
    cut: set[int] = set()
    bridges: list[Edge] = []
    timer = 0
    for root in range(p):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, next neighbour index)
        stack = [(root, -1, 0)]
        while stack:
            u, parent, i = stack[-1]
            if i < len(adj[u]):
                stack[-1] = (u, parent, i + 1)
                w = adj[u][i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, 0))
                elif w != parent:
                    low[u] = min(low[u], disc[w])
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    bridges.append(_norm(parent, u))
                if parent != root and low[u] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return sorted(cut), sorted(bridges)


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.p
    for s in range(g.p):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_eulerian(g: Graph) -> bool:
    """Connected with all degrees even; isolated vertices are not tolerated."""
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees())

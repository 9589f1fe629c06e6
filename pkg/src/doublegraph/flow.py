"""Integral max-flow (Dinic) used by the connectivity solvers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class SameEndpoints(ValueError):
    pass


@dataclass
class FlowNetwork:
    """Directed network with nonnegative integer arc capacities."""

    nodes: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)

    def add_arc(self, tail: int, head: int, capacity: int) -> None:
        if not (0 <= tail < self.nodes and 0 <= head < self.nodes):
            raise ValueError(f"arc ({tail}, {head}) references a missing node")
        if capacity < 0 or capacity != int(capacity):
            raise ValueError("capacities must be nonnegative integers")
        self.arcs.append((tail, head, int(capacity)))


class Dinic:
    """Reusable residual network.

    Arcs are stored in pairs ``2k`` / ``2k + 1`` so that ``a ^ 1`` is the
    reverse arc. :meth:`reset` restores the original capacities, which lets
    callers run many ``s``-``t`` queries on one network.
    """

    def __init__(self, nodes: int) -> None:
        self.nodes = nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(nodes)]
        self._initial: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rev_cap: int = 0) -> None:
        """Arc ``u -> v``; ``rev_cap > 0`` makes it a two-way link sharing residuals."""
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(cap)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(rev_cap)
        self._initial = []

    def reset(self) -> None:
        if not self._initial:
            self._initial = list(self.cap)
        else:
            self.cap[:] = self._initial

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        """Augment from ``s`` to ``t``; stop early once ``limit`` units are found."""
        if s == t:
            raise SameEndpoints("source and sink coincide")
        if not self._initial:
            self._initial = list(self.cap)
        head, cap, out = self.head, self.cap, self.out
        n = self.nodes
        flow = 0
        while limit is None or flow < limit:
            level = [-1] * n
            level[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for a in out[x]:
                    y = head[a]
                    if cap[a] > 0 and level[y] < 0:
                        level[y] = level[x] + 1
                        queue.append(y)
            if level[t] < 0:
                break
            it = [0] * n
            # blocking flow: one unit path at a time (unit-ish capacities)
            while limit is None or flow < limit:
                path = []
                x = s
                while x != t:
                    arcs = out[x]
                    i = it[x]
                    while i < len(arcs):
                        a = arcs[i]
                        if cap[a] > 0 and level[head[a]] == level[x] + 1:
                            break
                        i += 1
                    it[x] = i
                    if i == len(arcs):
                        if x == s:
                            break
                        level[x] = -1
                        a = path.pop()
                        x = head[a ^ 1]
                        it[x] += 1
                        continue
                    path.append(a)
                    x = head[a]
                if x != t:
                    break
                push = min(cap[a] for a in path)
                if limit is not None:
                    push = min(push, limit - flow)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                flow += push
        return flow

    def source_side(self, s: int) -> set[int]:
        """Nodes reachable from ``s`` in the current residual network."""
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for a in self.out[x]:
                y = self.head[a]
                if self.cap[a] > 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


def max_flow(net: FlowNetwork, s: int, t: int) -> tuple[int, set[int]]:
    """Maximum ``s``-``t`` flow value and the source side of a minimum cut."""
    if s == t:
        raise SameEndpoints("source and sink coincide")
    solver = Dinic(net.nodes)
    for tail, head, capacity in net.arcs:
        solver.add_edge(tail, head, capacity)
    value = solver.max_flow(s, t)
    return value, solver.source_side(s)

"""Hamiltonian cycles of small graphs and their lift to ``D_n[G]``."""

from __future__ import annotations

from typing import Sequence

from doublegraph.graph import Graph, components
from doublegraph.product import double_n

CycleSeq = tuple[int, ...]


class LiftError(ValueError):
    pass


class NotSpanningCycle(LiftError):
    pass


class TooShortForLift(LiftError):
    pass


def validate_spanning_cycle(h: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or k != h.p or len(set(cycle)) != k:
        return False
    if any(not 0 <= x < h.p for x in cycle):
        return False
    return all(h.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def hamiltonian_cycle(g: Graph) -> CycleSeq | None:
    """First spanning cycle in lexicographic order starting at vertex 0, or ``None``."""
    p = g.p
    if p < 3 or len(components(g)) > 1 or g.min_degree() < 2:
        return None
    adj = g.adj_mask
    full = (1 << p) - 1
    path = [0]

    def extend(last: int, used: int) -> bool:
        if used == full:
            return bool(adj[last] & 1)
        free = full & ~used
        # a free vertex with fewer than two usable neighbours is a dead end,
        # except that it may be the final vertex (needs last or 0 plus one more)
        ends = (1 << last) | 1
        for x in _bits(free):
            if bin(adj[x] & (free | ends)).count("1") < 2:
                return False
        for x in _bits(adj[last] & free):
            path.append(x)
            if extend(x, used | 1 << x):
                return True
            path.pop()
        return False

    return tuple(path) if extend(0, 1) else None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lift_hamiltonian(g: Graph, gamma: Sequence[int], n: int) -> CycleSeq:
    """Spanning cycle of ``D_n[G]`` stitched from a Hamiltonian cycle ``gamma`` of ``G``.

    Drop ``uv = (gamma[0], gamma[1])`` so that ``gamma - uv`` runs from ``u``
    to ``v``. For ``n >= 3`` also cut the first later edge ``u'v'`` disjoint
    from ``uv``, splitting that path into ``eta = u..u'`` and ``pi = v'..v``.
    Layer 0 carries ``gamma - uv``; the middle layers form a ladder whose top
    rail is ``eta`` and bottom rail ``pi``; the walk goes out along one rail
    per layer and comes back along the other. Adjacent layers are joined by
    the cross edges ``v -> u`` or ``u' -> v'``, alternating, so the last layer
    has to drop ``uv`` when ``n`` is even and ``u'v'`` when ``n`` is odd.
    """
    gamma = tuple(gamma)
    if not validate_spanning_cycle(g, gamma):
        raise NotSpanningCycle("gamma is not a spanning cycle of G")
    if n < 1:
        raise ValueError("layer count must be positive")
    p = g.p
    if n >= 3 and p < 4:
        raise TooShortForLift(f"a {p}-cycle has no two non-incident edges")

    def at(seq: Sequence[int], layer: int) -> list[int]:
        return [layer * p + x for x in seq]

    seq = gamma[1:] + gamma[:1]  # u .. v
    if n <= 2:
        out = [x for i in range(n) for x in at(seq, i)]
    else:
        eta, pi = seq[:2], seq[2:]  # u'v' = (gamma[2], gamma[3])
        out = at(seq, 0)
        for i in range(1, n - 1):
            out += at(eta if i % 2 else pi, i)
        out += at(seq if n % 2 == 0 else pi + eta, n - 1)
        for i in range(n - 2, 0, -1):
            out += at(pi if i % 2 else eta, i)

    lifted = tuple(out)
    if not validate_spanning_cycle(double_n(g, n).graph, lifted):
        raise AssertionError(f"lift produced an invalid cycle for n={n}: {lifted}")
    return lifted

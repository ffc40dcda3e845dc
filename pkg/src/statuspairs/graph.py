"""Undirected simple graphs, BFS distances and vertex statuses.

Adjacency is stored as one neighbour bitset (a Python ``int``) per vertex;
bit ``u`` of ``masks[v]`` is set iff ``uv`` is an edge.  All distance and
status arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph data."""


class GraphNotConnectedError(GraphError):
    def __init__(self, message: str = "graph not connected") -> None:
        super().__init__(message)


class GraphClass(str, enum.Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER_CONNECTED = "other-connected"
    DISCONNECTED = "disconnected"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    n: int
    masks: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graph order must be at least 1")
        if len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.masks):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int) -> Graph:
        return cls.from_edges(n, ((0, i) for i in range(1, n)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(row)) for row in self.masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.masks) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u]) if u < v]

    def add_edge(self, u: int, v: int) -> Graph:
        masks = list(self.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, tuple(masks))

    def add_vertex(self, neighbours: Iterable[int] = ()) -> Graph:
        """Return a copy with a new vertex ``n`` joined to ``neighbours``."""
        new = self.n
        masks = list(self.masks) + [0]
        for u in neighbours:
            masks[u] |= 1 << new
            masks[new] |= 1 << u
        return Graph(self.n + 1, tuple(masks))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        masks = [0] * self.n
        for v, row in enumerate(self.masks):
            target = 0
            for u in iter_bits(row):
                target |= 1 << perm[u]
            masks[perm[v]] = target
        return Graph(self.n, tuple(masks))

    def delete_edge(self, u: int, v: int) -> Graph:
        masks = list(self.masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, tuple(masks))

    @cached_property
    def is_connected(self) -> bool:
        return reach_mask(self.masks, 0) == (1 << self.n) - 1


def reach_mask(masks: Sequence[int], start: int, allowed: int = -1) -> int:
    """Bitset of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for order {g.n}")


def distances_from(g: Graph, v: int) -> list[int]:
    """Breadth-first distances from ``v`` to every vertex of ``g``."""
    _check_vertex(g, v)
    masks = g.masks
    dist = [0] * g.n
    seen = frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        for u in iter_bits(frontier):
            dist[u] = d
    if seen != (1 << g.n) - 1:
        raise GraphNotConnectedError()
    return dist


def mask_statuses(masks: Sequence[int], n: int) -> list[int] | None:
    """Statuses for a raw bitset graph, or ``None`` if it is disconnected.

    Hot path for the enumerators; skips all validation.
    """
    full = (1 << n) - 1
    out = []
    for v in range(n):
        seen = frontier = 1 << v
        total = d = 0
        while frontier:
            d += 1
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= masks[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
            total += d * frontier.bit_count()
        if seen != full:
            return None
        out.append(total)
    return out


def statuses(g: Graph) -> list[int]:
    """Status of every vertex, indexed by vertex."""
    result = mask_statuses(g.masks, g.n)
    if result is None:
        raise GraphNotConnectedError()
    return result


def status(g: Graph, v: int) -> int:
    return sum(distances_from(g, v))


def status_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex statuses sorted into nondecreasing order."""
    return tuple(sorted(statuses(g)))


def is_status_injective(g: Graph) -> bool:
    seq = status_sequence(g)
    return all(a != b for a, b in zip(seq, seq[1:]))


def wiener_index(g: Graph) -> int:
    return sum(statuses(g)) // 2


def classify(g: Graph) -> GraphClass:
    if not g.is_connected:
        return GraphClass.DISCONNECTED
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n:
        return GraphClass.UNICYCLIC
    return GraphClass.OTHER_CONNECTED


def unique_cycle(g: Graph) -> list[int]:
    """Vertices of the cycle of a unicyclic graph, in cyclic order.

    Leaves are stripped until only the 2-core remains, which for a
    unicyclic graph is exactly its cycle.
    """
    if classify(g) is not GraphClass.UNICYCLIC:
        raise GraphError("graph is not unicyclic")
    masks = list(g.masks)
    alive = (1 << g.n) - 1
    leaves = [v for v in range(g.n) if masks[v].bit_count() == 1]
    while leaves:
        v = leaves.pop()
        alive &= ~(1 << v)
        for u in iter_bits(masks[v] & alive):
            masks[u] &= ~(1 << v)
            if masks[u].bit_count() == 1:
                leaves.append(u)
        masks[v] = 0
    start = (alive & -alive).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in iter_bits(masks[cur] & alive) if u != prev][0]
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def tree_split_sizes(g: Graph, x: int, y: int) -> tuple[int, int]:
    """Orders of the components containing ``x`` and ``y`` after deleting edge ``xy``."""
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    h = g.delete_edge(x, y)
    side = reach_mask(h.masks, x).bit_count()
    return side, g.n - side

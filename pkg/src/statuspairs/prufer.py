"""Prüfer sequences: decoding and uniform random labelled trees."""

from __future__ import annotations

import heapq
import random
from itertools import product
from typing import Iterator, Sequence

from statuspairs.graph import Graph


def prufer_to_tree(seq: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Prüfer sequence over ``0..n-1`` (``n = len(seq) + 2`` by default)."""
    n = len(seq) + 2 if n is None else n
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for order {n} must have length {n - 2}")
    if n == 1:
        return Graph(1, (0,))
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"label {x} out of range")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labelled tree of order ``n``."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return Graph(1, (0,))
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def all_labelled_trees(n: int) -> Iterator[Graph]:
    """All ``n^(n-2)`` labelled trees on ``0..n-1``."""
    if n == 1:
        yield Graph(1, (0,))
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)

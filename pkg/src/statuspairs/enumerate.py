"""Isomorphism-free generators for small trees, unicyclic and connected graphs.

Connected graphs are produced by canonical augmentation: a graph of order
``k + 1`` is accepted from parent ``P`` (order ``k``) and neighbourhood ``S``
of the new vertex ``v`` only when ``v`` lies in the automorphism orbit of the
designated deletion vertex, chosen among the non-cut vertices by
(degree, neighbour-degree sum, canonical position).  Neighbourhoods are taken
one per orbit of ``Aut(P)`` on subsets.  No global seen-set is kept.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from statuspairs.canon import label_masks
from statuspairs.graph import Graph, reach_mask

TREE_MAX_ORDER = 12
UNICYCLIC_MAX_ORDER = 12
CONNECTED_MAX_ORDER = 9
CONNECTED_OPT_IN_MAX_ORDER = 10

WORKERS_ENV = "STATUSPAIRS_WORKERS"

Masks = tuple[int, ...]
T = TypeVar("T")


class EnumerationBoundError(ValueError):
    pass


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise EnumerationBoundError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise EnumerationBoundError(f"{WORKERS_ENV} must be >= 1")
    return value


# -- free trees -------------------------------------------------------------


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree of the root (depths shifted up by one)."""
    m = next((i for i in range(2, len(levels)) if levels[i] == 1), len(levels))
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail) :] = tail
    return nxt


def _levels_to_masks(levels: Sequence[int]) -> Masks:
    masks = [0] * len(levels)
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth:
            parent = last_at_depth[depth - 1]
            masks[i] |= 1 << parent
            masks[parent] |= 1 << i
        last_at_depth[depth] = i
    return tuple(masks)


def tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of the free trees of order ``n``.

    Each free tree is rooted at its centre (or one end of its bicentre) and
    visited once, stepping through rooted level sequences in reverse
    lexicographic order and skipping those that are not centrally rooted.
    """
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


def enum_trees(n: int) -> Iterator[Graph]:
    if not 1 <= n <= TREE_MAX_ORDER:
        raise EnumerationBoundError(f"tree enumeration supports 1 <= n <= {TREE_MAX_ORDER}, got {n}")
    for levels in tree_level_sequences(n):
        yield Graph(n, _levels_to_masks(levels))


# -- unicyclic graphs ---------------------------------------------------------


def enum_unicyclic(n: int) -> Iterator[Graph]:
    """Each tree plus each non-edge, deduplicated on canonical labelling."""
    if not 3 <= n <= UNICYCLIC_MAX_ORDER:
        raise EnumerationBoundError(f"unicyclic enumeration supports 3 <= n <= {UNICYCLIC_MAX_ORDER}, got {n}")
    seen: set[Masks] = set()
    for tree in enum_trees(n):
        masks = tree.masks
        for u in range(n):
            for v in range(u + 1, n):
                if masks[u] >> v & 1:
                    continue
                child = list(masks)
                child[u] |= 1 << v
                child[v] |= 1 << u
                key = label_masks(child, n).rows
                if key not in seen:
                    seen.add(key)
                    yield Graph(n, tuple(child))


# -- connected graphs by canonical augmentation -------------------------------


def _subset_representatives(k: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Smallest member of each ``Aut(P)``-orbit of nonempty vertex subsets."""
    total = 1 << k
    if not gens:
        return list(range(1, total))
    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        bit_images = [1 << g[i] for i in range(k)]
        for s in range(1, total):
            image = 0
            rest = s
            while rest:
                low = rest & -rest
                image |= bit_images[low.bit_length() - 1]
                rest ^= low
            a, b = find(s), find(image)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [s for s in range(1, total) if find(s) == s]


def augment(masks: Masks) -> Iterator[Masks]:
    """Children of connected parent ``masks`` accepted by the canonicity test."""
    k = len(masks)
    full = (1 << k) - 1
    deg = [m.bit_count() for m in masks]
    comps: list[list[int]] = []
    for u in range(k):
        allowed = full & ~(1 << u)
        rest, cs = allowed, []
        while rest:
            start = (rest & -rest).bit_length() - 1
            c = reach_mask(masks, start, allowed)
            cs.append(c)
            rest &= ~c
        comps.append(cs)
    vbit = 1 << k
    for s_mask in _subset_representatives(k, label_masks(masks, k).generators):
        s = s_mask.bit_count()
        ties = []
        rejected = False
        for u in range(k):
            du = deg[u] + (s_mask >> u & 1)
            if du < s:
                continue
            noncut = True
            for c in comps[u]:
                if not c & s_mask:
                    noncut = False
                    break
            if not noncut:
                continue
            if du > s:
                rejected = True
                break
            ties.append(u)
        if rejected:
            continue
        child = tuple(m | vbit if s_mask >> i & 1 else m for i, m in enumerate(masks)) + (s_mask,)
        if ties:
            gdeg = [d + (s_mask >> i & 1) for i, d in enumerate(deg)] + [s]

            def nbr_sum(x: int) -> int:
                total, row = 0, child[x]
                while row:
                    low = row & -row
                    total += gdeg[low.bit_length() - 1]
                    row ^= low
                return total

            mine = nbr_sum(k)
            best_ties = []
            for u in ties:
                other = nbr_sum(u)
                if other > mine:
                    rejected = True
                    break
                if other == mine:
                    best_ties.append(u)
            if rejected:
                continue
            if best_ties:
                lab = label_masks(child, k + 1)
                pos = lab.position
                chosen = max(best_ties + [k], key=pos.__getitem__)
                if lab.orbits[chosen] != lab.orbits[k]:
                    continue
        yield child


def _expand_shard(parents: list[Masks]) -> list[Masks]:
    return [child for p in parents for child in augment(p)]


def shards(items: Sequence[T], workers: int) -> list[Sequence[T]]:
    """Contiguous chunks, several per worker for load balance."""
    if not items:
        return []
    count = max(1, min(len(items), workers * 8))
    size = -(-len(items) // count)
    return [items[i : i + size] for i in range(0, len(items), size)]


def map_shards(fn: Callable[[Sequence[T]], object], items: Sequence[T], workers: int) -> Iterator:
    """Apply ``fn`` to each shard; results come back in shard order."""
    parts = shards(items, workers)
    if workers <= 1 or len(parts) <= 1:
        for part in parts:
            yield fn(part)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, parts)


def check_connected_order(n: int, allow_order_10: bool) -> None:
    limit = CONNECTED_OPT_IN_MAX_ORDER if allow_order_10 else CONNECTED_MAX_ORDER
    if not 1 <= n <= limit:
        hint = "" if allow_order_10 or n != CONNECTED_OPT_IN_MAX_ORDER else " (order 10 needs explicit opt-in)"
        raise EnumerationBoundError(f"connected enumeration supports 1 <= n <= {limit}, got {n}{hint}")


def connected_parents(n: int, workers: int = 1) -> list[Masks]:
    """All connected graphs of order ``n - 1`` (as bitsets), in generation order."""
    level: list[Masks] = [(0,)]
    for _ in range(1, n - 1):
        level = [c for chunk in map_shards(_expand_shard, level, workers) for c in chunk]
    return level


def enum_connected_masks(n: int, workers: int = 1, allow_order_10: bool = False) -> Iterator[Masks]:
    check_connected_order(n, allow_order_10)
    if n == 1:
        yield (0,)
        return
    parents = connected_parents(n, workers)
    if workers <= 1:
        for p in parents:
            yield from augment(p)
        return
    for chunk in map_shards(_expand_shard, parents, workers):
        yield from chunk


def enum_connected(n: int, workers: int = 1, allow_order_10: bool = False) -> Iterator[Graph]:
    for masks in enum_connected_masks(n, workers, allow_order_10):
        yield Graph(n, masks)


FAMILIES = ("trees", "unicyclic", "connected-all")


def enum_family(family: str, n: int, workers: int = 1, allow_order_10: bool = False) -> Iterable[Graph]:
    if family == "trees":
        return enum_trees(n)
    if family == "unicyclic":
        return enum_unicyclic(n)
    if family == "connected-all":
        return enum_connected(n, workers, allow_order_10)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def census(family: str, n: int, workers: int = 1, allow_order_10: bool = False) -> int:
    if family == "connected-all":
        return sum(1 for _ in enum_connected_masks(n, workers, allow_order_10))
    return sum(1 for _ in enum_family(family, n, workers, allow_order_10))

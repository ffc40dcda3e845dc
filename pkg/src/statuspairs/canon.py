"""Canonical labelling by partition refinement and individualisation.

Vertices are first coloured by their BFS layer profile (degree, number of
vertices at distance 2, ...), the colouring is refined to the coarsest
equitable ordered partition, and remaining ties are broken by a
backtracking search over individualised vertices.  The search keeps the
lexicographically largest relabelled adjacency matrix.  Automorphisms are
recorded whenever two leaves produce the same matrix and are used to prune
siblings on the leftmost path and to jump back past equivalent subtrees,
so the generators found describe the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from statuspairs.graph import Graph, iter_bits

DEFAULT_MAX_ORDER = 16


class CanonicalizationBoundError(ValueError):
    def __init__(self, n: int, bound: int) -> None:
        super().__init__(f"canonicalization bound exceeded: order {n} > {bound}")


@dataclass(frozen=True)
class Labeling:
    """Result of canonical labelling.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``rows`` are the adjacency bitsets of the relabelled graph.
    """

    n: int
    order: tuple[int, ...]
    rows: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    @property
    def form(self) -> bytes:
        from statuspairs.formats import to_graph6_bytes

        return to_graph6_bytes(Graph(self.n, self.rows))


def _cell_mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(masks: Sequence[int], cells: list[list[int]], queue: list[int]) -> None:
    """Refine ``cells`` in place to an equitable ordered partition.

    ``queue`` holds splitter cells as bitsets.  Fragments of a split cell are
    ordered by increasing neighbour count, which keeps the result invariant
    under relabelling.
    """
    pending = set(queue)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        if w not in pending:
            continue
        pending.discard(w)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(masks[v] & w).bit_count() for v in cell]
            lo = min(counts)
            if lo == max(counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            fragments = [groups[c] for c in sorted(groups)]
            cells[i : i + 1] = fragments
            pending.discard(_cell_mask(cell))
            for frag in fragments:
                fm = _cell_mask(frag)
                pending.add(fm)
                queue.append(fm)
            i += len(fragments)


def _layer_profile(masks: Sequence[int], v: int) -> tuple[int, ...]:
    seen = frontier = 1 << v
    profile = []
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        if frontier:
            profile.append(frontier.bit_count())
    return tuple(profile)


def _orbit_reps(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, masks: Sequence[int], n: int) -> None:
        self.masks = masks
        self.n = n
        self.first: tuple[list[int], list[int], tuple[int, ...]] | None = None
        self.best: tuple[list[int], list[int], tuple[int, ...]] | None = None
        self.gens: list[tuple[int, ...]] = []

    def run(self, colours: Sequence[object] | None = None) -> Labeling:
        masks, n = self.masks, self.n
        keys = [(_layer_profile(masks, v) if colours is None else (colours[v], _layer_profile(masks, v)))
                for v in range(n)]
        groups: dict[object, list[int]] = {}
        for v in range(n):
            groups.setdefault(keys[v], []).append(v)
        cells = [groups[k] for k in sorted(groups)]
        _refine(masks, cells, [_cell_mask(c) for c in cells])
        self._node(cells, [], True)
        assert self.best is not None
        _, order, rows = self.best
        return Labeling(
            n=n,
            order=tuple(order),
            rows=rows,
            generators=tuple(self.gens),
            orbits=tuple(_orbit_reps(n, self.gens)),
        )

    def _node(self, cells: list[list[int]], path: list[int], on_first: bool) -> int | None:
        if len(cells) == self.n:
            return self._leaf(cells, path)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[t]
        depth = len(path)
        explored: list[int] = []
        for w in cell:
            if on_first and explored:
                fixing = [g for g in self.gens if all(g[x] == x for x in path)]
                if fixing:
                    reps = _orbit_reps(self.n, fixing)
                    if any(reps[w] == reps[x] for x in explored):
                        continue
            explored.append(w)
            child = cells[:t] + [[w], [x for x in cell if x != w]] + cells[t + 1 :]
            _refine(self.masks, child, [1 << w])
            jump = self._node(child, path + [w], on_first and len(explored) == 1)
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for u in iter_bits(self.masks[v]):
                r |= 1 << pos[u]
            rows.append(r)
        cert = tuple(rows)
        if self.first is None:
            self.first = self.best = (path, order, cert)
            return None
        for ref in (self.first, self.best):
            assert ref is not None
            if cert == ref[2]:
                gen = [0] * self.n
                for a, b in zip(ref[1], order):
                    gen[a] = b
                self.gens.append(tuple(gen))
                common = 0
                for a, b in zip(ref[0], path):
                    if a != b:
                        break
                    common += 1
                return common
        assert self.best is not None
        if cert > self.best[2]:
            self.best = (path, order, cert)
        return None


def label_masks(masks: Sequence[int], n: int, colours: Sequence[object] | None = None) -> Labeling:
    """Canonically label a raw bitset graph (no bound or validity checks).

    ``colours`` optionally pins a vertex colouring that isomorphisms must
    preserve; colour values must be mutually comparable.
    """
    return _Search(masks, n).run(colours)


def canonical_labeling(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> Labeling:
    if g.n > max_order:
        raise CanonicalizationBoundError(g.n, max_order)
    return label_masks(g.masks, g.n)


def canonical_form(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (graph6 of the canonical relabelling)."""
    return canonical_labeling(g, max_order).form


def canonical_graph(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> Graph:
    lab = canonical_labeling(g, max_order)
    return Graph(g.n, lab.rows)


def automorphism_orbits(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, ...]:
    """Smallest vertex of each vertex's automorphism orbit."""
    return canonical_labeling(g, max_order).orbits


def is_isomorphic(g: Graph, h: Graph, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_labeling(g, max_order).rows == canonical_labeling(h, max_order).rows

"""Exhaustive search for trees and non-trees that share a status sequence."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from statuspairs.enumerate import (
    Masks,
    connected_parents,
    enum_connected_masks,
    enum_trees,
    enum_unicyclic,
    augment,
    check_connected_order,
    map_shards,
)
from statuspairs.formats import from_graph6, to_graph6
from statuspairs.graph import (
    Graph,
    GraphClass,
    GraphError,
    GraphNotConnectedError,
    classify,
    mask_statuses,
    status_sequence,
)

UNIVERSES = ("unicyclic", "all-nontree")


@dataclass(frozen=True)
class PairReport:
    n: int
    tree: str
    other: str
    other_class: str
    sequence: tuple[int, ...]
    verified: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tree": self.tree,
            "other": self.other,
            "other_class": self.other_class,
            "sequence": list(self.sequence),
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> PairReport:
        d = json.loads(line)
        return cls(d["n"], d["tree"], d["other"], d["other_class"], tuple(d["sequence"]), d["verified"])

    def recheck(self) -> bool:
        """Decode both graphs and recompute everything the report claims."""
        return verify_pair(from_graph6(self.tree), from_graph6(self.other)) == self


def verify_pair(tree: Graph, other: Graph) -> PairReport:
    if tree.n != other.n:
        raise GraphError(f"order mismatch: {tree.n} vs {other.n}")
    tree_class, other_class = classify(tree), classify(other)
    if GraphClass.DISCONNECTED in (tree_class, other_class):
        raise GraphNotConnectedError()
    seq_tree, seq_other = status_sequence(tree), status_sequence(other)
    return PairReport(
        n=tree.n,
        tree=to_graph6(tree),
        other=to_graph6(other),
        other_class=other_class.value,
        sequence=seq_tree,
        verified=(
            seq_tree == seq_other
            and tree_class is GraphClass.TREE
            and other_class is not GraphClass.TREE
        ),
    )


@dataclass
class SearchResult:
    n: int
    universe: str
    reports: list[PairReport] = field(default_factory=list)
    census: dict[str, int] = field(default_factory=dict)


def tree_index(n: int) -> dict[tuple[int, ...], list[Graph]]:
    """Map from status sequence to the trees of order ``n`` attaining it."""
    index: dict[tuple[int, ...], list[Graph]] = {}
    for t in enum_trees(n):
        index.setdefault(status_sequence(t), []).append(t)
    return index


def _match(masks: Masks, n: int, keys: frozenset[tuple[int, ...]]) -> tuple[int, ...] | None:
    st = mask_statuses(masks, n)
    if st is None:
        return None
    seq = tuple(sorted(st))
    return seq if seq in keys else None


def _search_shard(parents: Sequence[Masks], keys: frozenset[tuple[int, ...]]) -> tuple[int, list[Masks]]:
    examined, hits = 0, []
    for parent in parents:
        n = len(parent) + 1
        for child in augment(parent):
            if sum(m.bit_count() for m in child) // 2 < n:
                continue
            examined += 1
            if _match(child, n, keys) is not None:
                hits.append(child)
    return examined, hits


def _nontree_hits(n: int, keys: frozenset[tuple[int, ...]], workers: int, allow_order_10: bool) -> tuple[int, list[Masks]]:
    check_connected_order(n, allow_order_10)
    if n <= 2:
        # no connected non-tree graph exists below order 3
        return 0, []
    if workers <= 1:
        examined, hits = 0, []
        for child in enum_connected_masks(n, 1, allow_order_10):
            if sum(m.bit_count() for m in child) // 2 < n:
                continue
            examined += 1
            if _match(child, n, keys) is not None:
                hits.append(child)
        return examined, hits
    parents = connected_parents(n, workers)
    examined, hits = 0, []
    for shard_examined, shard_hits in map_shards(_ShardTask(keys), parents, workers):
        examined += shard_examined
        hits.extend(shard_hits)
    return examined, hits


class _ShardTask:
    """Picklable callable binding the tree-index keys for worker processes."""

    def __init__(self, keys: frozenset[tuple[int, ...]]) -> None:
        self.keys = keys

    def __call__(self, parents: Sequence[Masks]) -> tuple[int, list[Masks]]:
        return _search_shard(parents, self.keys)


def run_search(n: int, universe: str, workers: int = 1, allow_order_10: bool = False) -> SearchResult:
    """Index all trees of order ``n`` by status sequence, then stream the non-tree universe."""
    if universe not in UNIVERSES:
        raise ValueError(f"unknown universe {universe!r}; expected one of {UNIVERSES}")
    index = tree_index(n)
    keys = frozenset(index)
    result = SearchResult(n, universe)
    result.census["trees"] = sum(len(v) for v in index.values())
    if universe == "unicyclic":
        if n < 3:
            hits: list[Graph] = []
            result.census["unicyclic"] = 0
        else:
            examined = 0
            hits = []
            for g in enum_unicyclic(n):
                examined += 1
                if _match(g.masks, n, keys) is not None:
                    hits.append(g)
            result.census["unicyclic"] = examined
    else:
        examined, raw = _nontree_hits(n, keys, workers, allow_order_10)
        hits = [Graph(n, m) for m in raw]
        result.census["nontree-connected"] = examined
    for other in hits:
        for tree in index[status_sequence(other)]:
            report = verify_pair(tree, other)
            if not report.verified or not report.recheck():
                raise AssertionError(f"search hit failed re-verification: {report}")
            result.reports.append(report)
    return result


def find_pairs(n: int, universe: str, workers: int = 1, allow_order_10: bool = False) -> list[PairReport]:
    return run_search(n, universe, workers, allow_order_10).reports

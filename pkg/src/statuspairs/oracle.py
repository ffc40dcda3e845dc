"""Slow reference generators used to cross-check the fast enumerators.

These walk every labelled graph (or every Prüfer sequence) and deduplicate
by canonical form, so they share nothing with canonical augmentation except
the canonical labelling itself.
"""

from __future__ import annotations

from itertools import combinations, permutations

from statuspairs.canon import canonical_form
from statuspairs.enumerate import enum_trees
from statuspairs.graph import Graph, GraphClass, classify, status_sequence
from statuspairs.prufer import all_labelled_trees

ORACLE_MAX_ORDER = 7


def labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))


def brute_force_family(family: str, n: int) -> dict[bytes, Graph]:
    """Canonical form -> representative for every graph of ``family`` on ``n`` vertices."""
    if n > ORACLE_MAX_ORDER:
        raise ValueError(f"brute-force oracle limited to n <= {ORACLE_MAX_ORDER}")
    wanted = {
        "trees": {GraphClass.TREE},
        "unicyclic": {GraphClass.UNICYCLIC},
        "connected-all": {GraphClass.TREE, GraphClass.UNICYCLIC, GraphClass.OTHER_CONNECTED},
    }[family]
    out: dict[bytes, Graph] = {}
    for g in labelled_graphs(n):
        if classify(g) in wanted:
            out.setdefault(canonical_form(g), g)
    return out


def prufer_tree_forms(n: int) -> dict[bytes, Graph]:
    """Free trees of order ``n`` via all Prüfer sequences, deduplicated."""
    out: dict[bytes, Graph] = {}
    for t in all_labelled_trees(n):
        out.setdefault(canonical_form(t), t)
    return out


def unicyclic_by_tree_plus_edge(n: int) -> dict[bytes, Graph]:
    """Unicyclic graphs of order ``n`` from every free tree plus every non-edge."""
    out: dict[bytes, Graph] = {}
    for t in enum_trees(n):
        for u, v in combinations(range(n), 2):
            if not t.has_edge(u, v):
                g = t.add_edge(u, v)
                out.setdefault(canonical_form(g), g)
    return out


def isomorphic_by_permutation(g: Graph, h: Graph) -> bool:
    """Direct search over all vertex bijections."""
    if g.n != h.n or g.m != h.m:
        return False
    return any(g.relabel(p).masks == h.masks for p in permutations(range(g.n)))


def brute_force_pairs(n: int) -> list[tuple[Graph, Graph]]:
    """(tree, non-tree) pairs with equal status sequences over all labelled graphs, up to isomorphism."""
    reps = brute_force_family("connected-all", n)
    trees = [g for g in reps.values() if classify(g) is GraphClass.TREE]
    others = [g for g in reps.values() if classify(g) is not GraphClass.TREE]
    by_seq: dict[tuple[int, ...], list[Graph]] = {}
    for t in trees:
        by_seq.setdefault(status_sequence(t), []).append(t)
    return [(t, g) for g in others for t in by_seq.get(status_sequence(g), [])]

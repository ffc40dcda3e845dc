from __future__ import annotations

import pytest

from statuspairs.canon import canonical_form
from statuspairs.enumerate import (
    EnumerationBoundError,
    census,
    enum_connected,
    enum_connected_masks,
    enum_trees,
    enum_unicyclic,
    tree_level_sequences,
)
from statuspairs.graph import GraphClass, classify
from statuspairs.oracle import brute_force_family, prufer_tree_forms, unicyclic_by_tree_plus_edge

# regression constants; orders <= 6 are re-derived by the brute-force oracle below
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657, 11: 1806, 12: 5026}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

FAMILY_CLASS = {
    "trees": {GraphClass.TREE},
    "unicyclic": {GraphClass.UNICYCLIC},
    "connected-all": {GraphClass.TREE, GraphClass.UNICYCLIC, GraphClass.OTHER_CONNECTED},
}


def stream(family, n):
    return {"trees": enum_trees, "unicyclic": enum_unicyclic, "connected-all": enum_connected}[family](n)


@pytest.mark.parametrize("family,n", [(f, n) for f in FAMILY_CLASS for n in range(1, 7)
                                      if not (f == "unicyclic" and n < 3)])
def test_stream_equals_brute_force_oracle(family, n):
    graphs = list(stream(family, n))
    forms = [canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(forms)
    assert set(forms) == set(brute_force_family(family, n))
    assert all(classify(g) in FAMILY_CLASS[family] for g in graphs)


@pytest.mark.parametrize("n", range(1, 8))
def test_trees_equal_prufer_oracle(n):
    assert {canonical_form(t) for t in enum_trees(n)} == set(prufer_tree_forms(n))


@pytest.mark.parametrize("n", range(3, 9))
def test_unicyclic_equals_tree_plus_edge_oracle(n):
    assert {canonical_form(g) for g in enum_unicyclic(n)} == set(unicyclic_by_tree_plus_edge(n))


def test_small_examples():
    assert census("trees", 1) == 1
    assert census("trees", 4) == 2
    assert census("unicyclic", 3) == 1
    assert census("unicyclic", 4) == 2
    assert census("connected-all", 3) == 2
    assert census("connected-all", 4) == 6
    assert len(brute_force_family("unicyclic", 5)) == 5


@pytest.mark.parametrize("n", TREE_COUNTS)
def test_tree_census(n):
    trees = list(enum_trees(n))
    assert len(trees) == TREE_COUNTS[n]
    assert all(classify(t) is GraphClass.TREE for t in trees)
    assert len({canonical_form(t) for t in trees}) == len(trees)


@pytest.mark.parametrize("n", [n for n in UNICYCLIC_COUNTS if n <= 10])
def test_unicyclic_census(n):
    graphs = list(enum_unicyclic(n))
    assert len(graphs) == UNICYCLIC_COUNTS[n]
    assert all(classify(g) is GraphClass.UNICYCLIC for g in graphs)


@pytest.mark.parametrize("n", range(1, 9))
def test_connected_census_and_soundness(n):
    graphs = list(enum_connected(n))
    assert len(graphs) == CONNECTED_COUNTS[n]
    assert all(g.is_connected for g in graphs)
    if n <= 7:
        assert len({canonical_form(g) for g in graphs}) == len(graphs)


def test_level_sequences_start_centrally():
    seqs = list(tree_level_sequences(6))
    assert seqs[0] == [0, 1, 2, 3, 1, 2]
    assert len(seqs) == 6


def test_determinism_across_runs_and_workers():
    a = list(enum_connected_masks(7))
    b = list(enum_connected_masks(7))
    c = list(enum_connected_masks(7, workers=2))
    assert a == b == c
    assert [g.masks for g in enum_unicyclic(7)] == [g.masks for g in enum_unicyclic(7)]


def test_bounds():
    with pytest.raises(EnumerationBoundError):
        list(enum_trees(13))
    with pytest.raises(EnumerationBoundError):
        list(enum_trees(0))
    with pytest.raises(EnumerationBoundError):
        list(enum_unicyclic(2))
    with pytest.raises(EnumerationBoundError, match="opt-in"):
        list(enum_connected(10))
    with pytest.raises(EnumerationBoundError):
        list(enum_connected(11, allow_order_10=True))

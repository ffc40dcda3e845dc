from __future__ import annotations

import pytest

from statuspairs.constructions import build_tree, build_unicyclic
from statuspairs.enumerate import EnumerationBoundError
from statuspairs.formats import from_graph6
from statuspairs.graph import Graph, GraphError, GraphNotConnectedError, status_sequence
from statuspairs.oracle import brute_force_pairs
from statuspairs.search import PairReport, find_pairs, run_search, verify_pair


def test_verify_pair_examples():
    assert verify_pair(build_tree(19), build_unicyclic(19)).verified
    r = verify_pair(Graph.path(4), Graph.cycle(4))
    assert not r.verified
    assert status_sequence(Graph.path(4)) == (4, 4, 6, 6)
    assert status_sequence(Graph.cycle(4)) == (4, 4, 4, 4)
    r = verify_pair(build_tree(19), build_tree(19))
    assert not r.verified and r.other_class == "tree"


def test_verify_pair_errors():
    with pytest.raises(GraphError, match="order mismatch"):
        verify_pair(Graph.path(4), Graph.path(5))
    with pytest.raises(GraphNotConnectedError):
        verify_pair(Graph.path(3), Graph.from_edges(3, [(0, 1)]))


def test_report_json_roundtrip():
    r = verify_pair(build_tree(20), build_unicyclic(20))
    assert PairReport.from_json(r.to_json()) == r
    assert r.recheck()


@pytest.mark.parametrize("n", range(1, 7))
def test_full_search_matches_brute_force(n):
    assert brute_force_pairs(n) == []
    assert find_pairs(n, "all-nontree") == []


@pytest.mark.parametrize("n", [4, 8])
def test_no_pairs_small(n):
    assert find_pairs(n, "all-nontree") == []


def test_order_10_unicyclic_pairs():
    reports = find_pairs(10, "unicyclic")
    assert reports
    for r in reports:
        assert r.verified and r.other_class == "unicyclic"
        tree, other = from_graph6(r.tree), from_graph6(r.other)
        assert status_sequence(tree) == status_sequence(other) == r.sequence


def test_search_deterministic():
    a = run_search(10, "unicyclic")
    b = run_search(10, "unicyclic")
    assert a.reports == b.reports and a.census == b.census
    c = run_search(7, "all-nontree", workers=2)
    d = run_search(7, "all-nontree", workers=1)
    assert c.census == d.census == {"trees": 11, "nontree-connected": 842}


def test_search_bounds():
    with pytest.raises(EnumerationBoundError):
        find_pairs(10, "all-nontree")
    with pytest.raises(ValueError):
        find_pairs(5, "bicyclic")

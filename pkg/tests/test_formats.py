from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from statuspairs.constructions import build_tree
from statuspairs.formats import (
    from_edge_list,
    from_graph6,
    parse_graph,
    to_edge_list,
    to_graph6,
    to_graph6_bytes,
)
from statuspairs.graph import Graph, GraphError

from conftest import connected_graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(connected_graphs(12))
@settings(max_examples=150, deadline=None)
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(_nx(g), header=False).strip()
    assert to_graph6_bytes(g) == expected
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", [1, 2, 62, 63, 64, 200])
def test_graph6_order_field(n):
    g = Graph.path(n)
    assert to_graph6_bytes(g) == nx.to_graph6_bytes(nx.path_graph(n), header=False).strip()
    assert from_graph6(to_graph6(g)) == g


def test_graph6_known_strings():
    assert to_graph6(Graph.complete(4)) == "C~"
    assert to_graph6(Graph.path(4)) == "Ch"
    assert from_graph6(">>graph6<<Ch\n") == Graph.path(4)


@pytest.mark.parametrize("bad", ["", "C~~~", "C", "\x7fA", "é"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_roundtrip():
    g = build_tree(21)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "21 20"
    assert from_edge_list(text) == g
    assert parse_graph(text) == g
    assert parse_graph(to_graph6(g) + "\n") == g


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n0 0\n", "2 2\n0 1\n1 0\n", "3 1\n0 x\n", "3 1\n0 1 2\n"],
)
def test_edge_list_malformed(text):
    with pytest.raises(GraphError):
        from_edge_list(text)

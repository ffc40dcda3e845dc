from __future__ import annotations

import random
from itertools import permutations

import pytest

from statuspairs.canon import (
    CanonicalizationBoundError,
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
)
from statuspairs.constructions import build_tree, build_unicyclic
from statuspairs.enumerate import enum_connected
from statuspairs.graph import Graph
from statuspairs.oracle import isomorphic_by_permutation, labelled_graphs

PAW = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def brute_orbits(g: Graph) -> tuple[int, ...]:
    images = [set() for _ in range(g.n)]
    for p in permutations(range(g.n)):
        if g.relabel(p).masks == g.masks:
            for v in range(g.n):
                images[v].add(p[v])
    return tuple(min(s) for s in images)


def test_relabelled_path_same_form():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_path_and_star_differ():
    assert canonical_form(Graph.path(4)) != canonical_form(Graph.star(4))


def test_paw_all_relabellings_single_form():
    forms = {canonical_form(PAW.relabel(p)) for p in permutations(range(4))}
    assert len(forms) == 1


def test_bound():
    with pytest.raises(CanonicalizationBoundError, match="canonicalization bound exceeded"):
        canonical_form(Graph.path(17))
    assert canonical_form(Graph.path(17), max_order=20)


def test_form_is_graph6_of_isomorphic_copy():
    from statuspairs.formats import from_graph6

    g = build_unicyclic(19)
    copy = from_graph6(canonical_form(g, max_order=19))
    assert is_isomorphic(g, copy, max_order=19)


@pytest.mark.parametrize(
    "g",
    [Graph.complete(7), Graph.cycle(9), Graph.star(8), PAW, Graph.path(10), build_tree(19), build_unicyclic(20),
     Graph.from_edges(8, [(i, j) for i in range(4) for j in range(4, 8)]),
     Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                      + [(i, i + 5) for i in range(5)])],
    ids=["K7", "C9", "star8", "paw", "P10", "T19", "U20", "K44", "petersen"],
)
def test_invariance_under_random_relabelling(g):
    rng = random.Random(g.n * 7919 + g.m)
    base = canonical_form(g, max_order=20)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm), max_order=20) == base


def test_orbits_match_brute_force_all_graphs_order_5():
    for g in labelled_graphs(5):
        assert automorphism_orbits(g) == brute_orbits(g)


def test_orbits_known_graphs():
    petersen = Graph.from_edges(
        10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
    )
    assert set(automorphism_orbits(petersen)) == {0}
    assert automorphism_orbits(PAW) == (0, 0, 2, 3)
    assert len(set(automorphism_orbits(build_tree(19), max_order=19))) == 19


def test_generators_are_automorphisms():
    for g in [Graph.complete(6), Graph.cycle(8), build_unicyclic(19)]:
        lab = canonical_labeling(g, max_order=20)
        for gen in lab.generators:
            assert g.relabel(gen).masks == g.masks


@pytest.mark.parametrize("n", range(1, 7))
def test_no_collisions_among_non_isomorphic(n):
    """Distinct enumerator outputs are pairwise non-isomorphic by direct search."""
    graphs = list(enum_connected(n))
    forms = [canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(forms)
    for i, g in enumerate(graphs):
        for h in graphs[i + 1 :]:
            if g.m == h.m and sorted(map(g.degree, range(n))) == sorted(map(h.degree, range(n))):
                assert not isomorphic_by_permutation(g, h)


@pytest.mark.parametrize("n", [7])
def test_completeness_order_7(n):
    """Isomorphic relabellings of every connected order-7 graph map to its own form and no other."""
    rng = random.Random(7)
    graphs = list(enum_connected(n))
    forms = {canonical_form(g): g for g in graphs}
    assert len(forms) == len(graphs) == 853
    for g in graphs:
        perm = list(range(n))
        rng.shuffle(perm)
        assert forms[canonical_form(g.relabel(perm))] is g

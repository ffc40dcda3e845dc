"""Trees and unicyclic graphs sharing a status sequence."""

from statuspairs.canon import automorphism_orbits, canonical_form, canonical_labeling
from statuspairs.constructions import (
    ClosedFormTable,
    ConstructionPair,
    build_pair,
    build_tree,
    build_unicyclic,
    closed_form_status,
    closed_form_table,
    correspondence,
)
from statuspairs.enumerate import enum_connected, enum_trees, enum_unicyclic
from statuspairs.graph import (
    Graph,
    GraphClass,
    GraphError,
    GraphNotConnectedError,
    classify,
    distances_from,
    is_status_injective,
    status,
    status_sequence,
)
from statuspairs.injectivity import (
    InjectivityVerdict,
    even_injective,
    f,
    four_window_check,
    gamma_member,
    h,
    lemma3_solutions,
    lemma4_check,
    odd_injective,
)
from statuspairs.search import PairReport, find_pairs, verify_pair

__all__ = [
    "ClosedFormTable", "ConstructionPair", "Graph", "GraphClass", "GraphError", "GraphNotConnectedError",
    "InjectivityVerdict", "PairReport", "automorphism_orbits", "build_pair", "build_tree", "build_unicyclic",
    "canonical_form", "canonical_labeling", "classify", "closed_form_status", "closed_form_table",
    "correspondence", "distances_from", "enum_connected", "enum_trees", "enum_unicyclic", "even_injective",
    "f", "find_pairs", "four_window_check", "gamma_member", "h", "is_status_injective", "lemma3_solutions",
    "lemma4_check", "odd_injective", "status", "status_sequence", "verify_pair",
]

"""Induced saturation of graphs and trigraphs: verifiers, constructions, searches."""

from indsat_lab.canon import canonical_form
from indsat_lab.graph import (
    BlowupMode,
    EdgeColor,
    Graph,
    GraphError,
    GuardError,
    Trigraph,
    blowup,
    cartesian_product,
    complement,
    disjoint_union,
    flip_edge,
    join,
)
from indsat_lab.induced import count_induced, find_induced, find_induced_through
from indsat_lab.saturation import (
    Verdict,
    VerdictKind,
    is_free,
    verify_family_saturated,
    verify_graph_saturated,
    verify_trigraph_saturated,
)

__all__ = [
    "BlowupMode",
    "EdgeColor",
    "Graph",
    "GraphError",
    "GuardError",
    "Trigraph",
    "Verdict",
    "VerdictKind",
    "blowup",
    "canonical_form",
    "cartesian_product",
    "complement",
    "count_induced",
    "disjoint_union",
    "find_induced",
    "find_induced_through",
    "flip_edge",
    "is_free",
    "join",
    "verify_family_saturated",
    "verify_graph_saturated",
    "verify_trigraph_saturated",
]

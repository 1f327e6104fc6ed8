"""Certified distance spectra of graphs and the lambda_2 < -0.5858 characterization."""

from ._core import (
    Graph,
    char_poly,
    classify,
    clique_join,
    compare_lambda2_threshold,
    complement,
    complete,
    count_greater,
    cycle,
    disjoint_union,
    distance_matrix,
    emit_graph6,
    empty_graph,
    eval_family,
    family_polynomial,
    float_spectrum,
    is_connected,
    join,
    lambda_enclosure,
    parse_graph6,
    path,
    star,
    theorem_condition,
    threshold,
    verify_theorem,
)

__all__ = [
    "Graph",
    "char_poly",
    "classify",
    "clique_join",
    "compare_lambda2_threshold",
    "complement",
    "complete",
    "count_greater",
    "cycle",
    "disjoint_union",
    "distance_matrix",
    "emit_graph6",
    "empty_graph",
    "eval_family",
    "family_polynomial",
    "float_spectrum",
    "is_connected",
    "join",
    "lambda_enclosure",
    "parse_graph6",
    "path",
    "star",
    "theorem_condition",
    "threshold",
    "verify_theorem",
]

"""Sequential topological complexity of right-angled Artin groups."""

from .cliques import enumerate_maximal_cliques, max_clique_size
from .genfunc import (
    IntPolynomial,
    RationalGF,
    catalog_genfunc,
    expand_series,
    generating_polynomial,
    poly_arith,
)
from .graph import Graph, parse_graph
from .solver import ZrResult, tc_raag, z_r_exact, z_r_oracle, z_sequence
from .words import (
    is_in_special_subgroup,
    multiply,
    normal_form,
    project_fA,
    verify_lemmas,
)

__all__ = [
    "Graph",
    "IntPolynomial",
    "RationalGF",
    "ZrResult",
    "catalog_genfunc",
    "enumerate_maximal_cliques",
    "expand_series",
    "generating_polynomial",
    "is_in_special_subgroup",
    "max_clique_size",
    "multiply",
    "normal_form",
    "parse_graph",
    "poly_arith",
    "project_fA",
    "tc_raag",
    "verify_lemmas",
    "z_r_exact",
    "z_r_oracle",
    "z_sequence",
]

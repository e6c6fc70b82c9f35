"""Generalized binomial edge ideals of graphs.

Exact toolkit for the ideals generated by the 2x2 minors of an m x n
variable grid picked along graph edges: closed-form depth and regularity
for generalized block graphs, combinatorial reduced Groebner bases with
self-validation, minimal primes through cut-point sets, and an independent
Stanley-Reisner homology oracle for cross-checking everything.
"""

from .graphs import (
    Classification,
    CliqueComplex,
    CutSetCensus,
    Graph,
    GraphParseError,
    LeafSplit,
    classify,
    clique_complex,
    connected_components,
    cut_set_census,
    enumerate_connected_graphs,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_path,
    leaf_decomposition,
    parse_graph,
)
from .homology import (
    BettiTable,
    SimplicialComplex,
    depth_of_quotient,
    hilbert_check,
    hilbert_numerator,
    hochster_betti,
    reduced_homology_ranks,
    regularity_of_quotient,
    stanley_reisner,
)
from .ideals import (
    AdmissiblePath,
    AntitoneMap,
    BasisValidationError,
    FormulaResult,
    IdealSplit,
    MinimalPrime,
    admissible_paths,
    antitone_maps,
    depth_formula,
    gbei_generators,
    initial_ideal,
    initial_ideal_commutes_with_columns,
    is_unmixed,
    krull_dimension,
    leaf_ideal_split,
    minimal_primes,
    minor,
    rauh_basis,
    regularity_formula,
)
from .poly import (
    ELIM,
    Ideal,
    Monomial,
    Polynomial,
    VarGrid,
    buchberger,
    ideal_equal,
    ideal_membership,
    intersect,
    is_groebner_basis,
    is_reduced_basis,
    minimal_generators,
    monomial_ideal_equal,
    normal_form,
    s_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePath",
    "AntitoneMap",
    "BasisValidationError",
    "BettiTable",
    "Classification",
    "CliqueComplex",
    "CutSetCensus",
    "ELIM",
    "FormulaResult",
    "Graph",
    "GraphParseError",
    "Ideal",
    "IdealSplit",
    "LeafSplit",
    "MinimalPrime",
    "Monomial",
    "Polynomial",
    "SimplicialComplex",
    "VarGrid",
    "admissible_paths",
    "antitone_maps",
    "buchberger",
    "classify",
    "clique_complex",
    "connected_components",
    "cut_set_census",
    "depth_formula",
    "depth_of_quotient",
    "enumerate_connected_graphs",
    "gbei_generators",
    "hilbert_check",
    "hilbert_numerator",
    "hochster_betti",
    "ideal_equal",
    "ideal_membership",
    "induced_subgraph",
    "initial_ideal",
    "initial_ideal_commutes_with_columns",
    "intersect",
    "is_chordal",
    "is_connected",
    "is_groebner_basis",
    "is_path",
    "is_reduced_basis",
    "is_unmixed",
    "krull_dimension",
    "leaf_decomposition",
    "leaf_ideal_split",
    "minimal_generators",
    "minimal_primes",
    "minor",
    "monomial_ideal_equal",
    "normal_form",
    "parse_graph",
    "rauh_basis",
    "reduced_homology_ranks",
    "regularity_formula",
    "regularity_of_quotient",
    "s_polynomial",
    "stanley_reisner",
]

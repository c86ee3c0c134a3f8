"""Exact-arithmetic construction and verification of poised and GC node sets.

The package builds planar node sets for bivariate polynomial interpolation
(principal lattices, Chung-Yao lattices, Berzolari-Radon sets, randomized
poised sets), computes fundamental polynomials and line-usage sets in exact
rational arithmetic, and machine-checks the combinatorial statements about
k-node lines on concrete instances.
"""

from .algebra import (
    Poly,
    Rational,
    d_nk,
    dim_pi,
    divide_by_linear,
    divide_poly,
    poly_eval,
    rational,
)
from .constructions import (
    GeneratorConfig,
    affine_map,
    affine_map_line,
    berzolari_radon,
    chung_yao,
    gc3_four_maximal,
    generate,
    principal_lattice,
    random_lines_general_position,
    random_poised,
)
from .errors import (
    GenerationError,
    InternalConsistencyError,
    NotPoisedError,
    PreconditionError,
)
from .geometry import (
    Line,
    LineClassification,
    Node,
    NodeSet,
    classify_lines,
    incident,
    intersect_lines,
    line_through,
    maximal_lines,
    node,
    node_set,
)
from .harness import (
    ConjectureRecord,
    TheoremVerdict,
    analyze,
    check_conjecture,
    check_n_minus_1_line,
    check_nline_poised,
    check_nline_theorem,
    check_structure_theorems,
    check_usage_independence,
    corpus_run,
    verify_set,
)
from .poisedness import (
    DependenceWitness,
    VandermondeMatrix,
    curves_through,
    dependence_witness,
    fundamental_poly,
    fundamental_polys,
    is_essentially_dependent,
    is_independent,
    is_poised,
    rank_det,
    vandermonde,
)
from .usage import (
    GCReport,
    MaximalCurveCheck,
    UsageSet,
    gc_factorize,
    is_maximal_curve,
    n_curve,
    product_of_lines,
    uses_curve,
    x_line,
)

__version__ = "0.1.0"

__all__ = [
    "ConjectureRecord",
    "DependenceWitness",
    "GCReport",
    "GenerationError",
    "GeneratorConfig",
    "InternalConsistencyError",
    "Line",
    "LineClassification",
    "MaximalCurveCheck",
    "Node",
    "NodeSet",
    "NotPoisedError",
    "Poly",
    "PreconditionError",
    "Rational",
    "TheoremVerdict",
    "UsageSet",
    "VandermondeMatrix",
    "affine_map",
    "affine_map_line",
    "analyze",
    "berzolari_radon",
    "check_conjecture",
    "check_n_minus_1_line",
    "check_nline_poised",
    "check_nline_theorem",
    "check_structure_theorems",
    "check_usage_independence",
    "chung_yao",
    "classify_lines",
    "corpus_run",
    "curves_through",
    "d_nk",
    "dependence_witness",
    "dim_pi",
    "divide_by_linear",
    "divide_poly",
    "fundamental_poly",
    "fundamental_polys",
    "gc3_four_maximal",
    "gc_factorize",
    "generate",
    "incident",
    "intersect_lines",
    "is_essentially_dependent",
    "is_independent",
    "is_maximal_curve",
    "is_poised",
    "line_through",
    "maximal_lines",
    "n_curve",
    "node",
    "node_set",
    "poly_eval",
    "principal_lattice",
    "product_of_lines",
    "random_lines_general_position",
    "random_poised",
    "rank_det",
    "rational",
    "uses_curve",
    "vandermonde",
    "verify_set",
    "x_line",
]

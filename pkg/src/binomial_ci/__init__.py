"""Exact computer algebra for binomial complete intersections on normal form.

Reduction graphs on monomials, certified rewriting to the avoided-power basis,
Macaulay dual generators, structured resultant determinants and radicals, and
brute-force linear-algebra oracles, all in exact rational arithmetic.
"""

from .algebra import (
    CoeffMonomial,
    Monomial,
    SparsePoly,
    cyclotomic,
    monomials_of_degree,
    multinomial,
    poly_divides,
)
from .dual import (
    CONTRACTION,
    DIFFERENTIATION,
    DualGenerator,
    apply_action,
    dual_generator,
    s_vector,
    verify_annihilation,
)
from .family import (
    BinomialFamily,
    CoeffAssignment,
    FamilyError,
    FamilyParseError,
    FamilyValidationError,
    family_from_json,
    family_to_json,
    format_family,
    load_family,
    parse_family,
    parse_monomial,
    specialize,
)
from .graph import Cycle, ReductionGraph, build_graph, cycle_polynomial, graph_cycle_polynomial, to_dot
from .lefschetz import HessianMatrix, hessian, lefschetz_rank, monomial_basis, slp_check
from .oracle import (
    HilbertFunction,
    NotCompleteIntersectionError,
    basis_check,
    ci_reference,
    hilbert_function,
    ideal_membership,
    inverse_system_dims,
    is_complete_intersection,
    m_spans_ann_quotient,
)
from .resultant import (
    CMatrix,
    RadicalResult,
    build_c_matrix,
    det_numeric_oracle,
    det_structural,
    radical_of_cycle_product,
    resultant_radical,
)
from .rewrite import (
    Certificate,
    PolyReduction,
    ReductionOutcome,
    TO_BASIS,
    TO_CYCLE,
    certificate,
    check_certificate,
    reduce_monomial,
    reduce_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialFamily",
    "CMatrix",
    "Certificate",
    "CoeffAssignment",
    "CoeffMonomial",
    "CONTRACTION",
    "Cycle",
    "DIFFERENTIATION",
    "DualGenerator",
    "FamilyError",
    "FamilyParseError",
    "FamilyValidationError",
    "HessianMatrix",
    "HilbertFunction",
    "Monomial",
    "NotCompleteIntersectionError",
    "PolyReduction",
    "RadicalResult",
    "ReductionGraph",
    "ReductionOutcome",
    "SparsePoly",
    "TO_BASIS",
    "TO_CYCLE",
    "apply_action",
    "basis_check",
    "build_c_matrix",
    "build_graph",
    "certificate",
    "check_certificate",
    "ci_reference",
    "cycle_polynomial",
    "cyclotomic",
    "det_numeric_oracle",
    "det_structural",
    "dual_generator",
    "family_from_json",
    "family_to_json",
    "format_family",
    "graph_cycle_polynomial",
    "hessian",
    "hilbert_function",
    "ideal_membership",
    "inverse_system_dims",
    "is_complete_intersection",
    "lefschetz_rank",
    "load_family",
    "m_spans_ann_quotient",
    "monomial_basis",
    "monomials_of_degree",
    "multinomial",
    "parse_family",
    "parse_monomial",
    "poly_divides",
    "radical_of_cycle_product",
    "reduce_monomial",
    "reduce_polynomial",
    "resultant_radical",
    "s_vector",
    "slp_check",
    "specialize",
    "to_dot",
    "verify_annihilation",
]

"""Exact recursive polynomial remainder sequences and subresultant matrices.

Everything is computed over the rationals with :class:`fractions.Fraction`.
Determinants run through a fraction-free Bareiss kernel, compiled with Cython
when available (see :data:`BACKEND`).
"""

from ._kernel import BACKEND
from .errors import (
    ConstantInput,
    DegreeOrder,
    DegreeTooSmall,
    DivisionByZeroPoly,
    DomainError,
    EmptySequence,
    IncompletePrs,
    IndexOutOfRange,
    JOutOfRange,
    NonSquare,
    PolyParseError,
    SingularMatrix,
    SingularU,
    ZeroInput,
    ZeroPolynomial,
)
from .exact_arith import (
    Rational,
    RatMatrix,
    RowSolver,
    as_rational,
    det,
    solve_row_system,
    submatrix,
)
from .nested import NestedSubresMatrix, nested_matrix, nested_subres_poly
from .poly import NEG_INF, Poly, coeff_vector
from .prs import (
    RULES,
    DivisionRule,
    Prs,
    RecursivePrs,
    compute_prs,
    compute_recursive_prs,
    gcd_by_prs,
    monic_rule,
    sturm_rule,
)
from .recsubres import (
    RecSubresMatrix,
    ScaleLedger,
    build_recsubres_matrix,
    clear_caches,
    prop1_size,
    recsubres_poly,
    recursive_theorem_factor,
    scale_ledger,
    valid_degrees,
)
from .reduced import (
    ReducedNestedMatrix,
    h_matrix,
    reduced_from_k0,
    reduced_nested_matrix,
    reduced_nested_poly,
    u_determinant,
)
from .rootcount import (
    RootCount,
    SignSequence,
    count_real_roots_with_multiplicity,
    lambda_at_infinity,
    root_count_report,
    sign_variations,
)
from .subres import (
    SubresMatrix,
    determinant_polynomial,
    fundamental_theorem_factor,
    subres_matrix,
    subres_poly,
    sylvester_matrix,
)
from .verify import VerificationReport, verify_identities

__all__ = [
    "BACKEND",
    "NEG_INF",
    "RULES",
    "ConstantInput",
    "DegreeOrder",
    "DegreeTooSmall",
    "DivisionByZeroPoly",
    "DivisionRule",
    "DomainError",
    "EmptySequence",
    "IncompletePrs",
    "IndexOutOfRange",
    "JOutOfRange",
    "NestedSubresMatrix",
    "NonSquare",
    "Poly",
    "PolyParseError",
    "Prs",
    "RatMatrix",
    "Rational",
    "RecSubresMatrix",
    "RecursivePrs",
    "ReducedNestedMatrix",
    "RootCount",
    "RowSolver",
    "ScaleLedger",
    "SignSequence",
    "SingularMatrix",
    "SingularU",
    "SubresMatrix",
    "VerificationReport",
    "ZeroInput",
    "ZeroPolynomial",
    "as_rational",
    "build_recsubres_matrix",
    "clear_caches",
    "coeff_vector",
    "compute_prs",
    "compute_recursive_prs",
    "count_real_roots_with_multiplicity",
    "det",
    "determinant_polynomial",
    "fundamental_theorem_factor",
    "gcd_by_prs",
    "h_matrix",
    "lambda_at_infinity",
    "monic_rule",
    "nested_matrix",
    "nested_subres_poly",
    "prop1_size",
    "recsubres_poly",
    "recursive_theorem_factor",
    "reduced_from_k0",
    "reduced_nested_matrix",
    "reduced_nested_poly",
    "root_count_report",
    "scale_ledger",
    "sign_variations",
    "solve_row_system",
    "sturm_rule",
    "submatrix",
    "subres_matrix",
    "subres_poly",
    "sylvester_matrix",
    "u_determinant",
    "valid_degrees",
    "verify_identities",
]

__version__ = "0.1.0"

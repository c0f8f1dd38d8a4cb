"""Decomposable forms generated by families of linear recurrences.

Given k linearly independent order-k sequences sharing one recurrence
relation, this package constructs the degree-k homogeneous form whose value
at the family's terms is a fixed exponential, factors it completely into
linear factors over the splitting field, and verifies the resulting
identities and Diophantine solutions exactly over the rationals.
"""

from .algebra import (
    ComplexApprox,
    HomogeneousForm,
    Rat,
    RatMatrix,
    UniPoly,
    expand_linear_factors,
    exponent_vectors,
    format_rat,
    parse_rat,
)
from .binary import (
    BinaryInvariants,
    IdentityReport,
    binary_decomposition,
    binary_form,
    binary_invariants,
    classical_identity_suite,
)
from .factorization import (
    Decomposition,
    LinearFactor,
    RootDatum,
    block_matrix_b,
    char_roots,
    decompose_form,
    orthonormal_factorization,
    special_basis_matrix,
)
from .form_builder import (
    CoefficientTensor,
    FormPackage,
    build_form,
    build_form_via_companion,
    cassini_form,
    linear_coefficients,
)
from .problems import BUNDLED_PROBLEMS, Problem, load_problem
from .recurrence import RecurrenceRelation, Sequence, SequenceFamily
from .verify import (
    DiophantineSolution,
    VerificationReport,
    diophantine_solutions,
    oracle_fit_form,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BUNDLED_PROBLEMS",
    "BinaryInvariants",
    "ComplexApprox",
    "CoefficientTensor",
    "Decomposition",
    "DiophantineSolution",
    "FormPackage",
    "HomogeneousForm",
    "IdentityReport",
    "LinearFactor",
    "Problem",
    "Rat",
    "RatMatrix",
    "RecurrenceRelation",
    "RootDatum",
    "Sequence",
    "SequenceFamily",
    "UniPoly",
    "VerificationReport",
    "binary_decomposition",
    "binary_form",
    "binary_invariants",
    "block_matrix_b",
    "build_form",
    "build_form_via_companion",
    "cassini_form",
    "char_roots",
    "classical_identity_suite",
    "decompose_form",
    "diophantine_solutions",
    "expand_linear_factors",
    "exponent_vectors",
    "format_rat",
    "linear_coefficients",
    "load_problem",
    "oracle_fit_form",
    "orthonormal_factorization",
    "parse_rat",
    "special_basis_matrix",
    "verify_identity",
]

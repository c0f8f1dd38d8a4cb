"""Exact arithmetic substrate: rationals, matrices, polynomials, forms."""

from .approx import ComplexApprox
from .forms import HomogeneousForm, expand_linear_factors, exponent_vectors
from .matrix import RatMatrix
from .rational import Rat, format_rat, parse_rat
from .unipoly import UniPoly

__all__ = [
    "ComplexApprox",
    "HomogeneousForm",
    "Rat",
    "RatMatrix",
    "UniPoly",
    "expand_linear_factors",
    "exponent_vectors",
    "format_rat",
    "parse_rat",
]

"""Exception types shared across the package.

The split mirrors how callers react: dimension and domain mistakes are
programming errors (ValueError family), while precision and certification
problems are runtime conditions that carry diagnostic payloads.
"""

from __future__ import annotations


class RecformError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(RecformError, ValueError):
    """Shapes or arities do not match (non-square matrix, wrong point length)."""


class MathPreconditionError(RecformError, ValueError):
    """A mathematical precondition is violated (zero trailing coefficient, ...)."""


class SingularMatrixError(MathPreconditionError):
    """Matrix has determinant zero where an inverse or solve was requested."""

    def __init__(self, message: str = "matrix is singular (det = 0)"):
        super().__init__(message)
        self.det = 0


class DependentInitialsError(SingularMatrixError):
    """The initial-value rows of a sequence family are linearly dependent."""

    def __init__(self, message: str = "initial vectors are linearly dependent (det = 0)"):
        super().__init__(message)


class PrecisionError(RecformError, RuntimeError):
    """Root iteration failed to reach the requested error bound."""

    def __init__(self, message: str, best_bounds: tuple[float, ...] = ()):
        super().__init__(message)
        self.best_bounds = tuple(best_bounds)


class CertificationError(RecformError, RuntimeError):
    """An expanded factorization deviates from its target beyond tolerance."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class UnderdeterminedError(RecformError, ValueError):
    """A fitting system has deficient rank; more sample points are needed."""


class NonIntegralFamilyError(RecformError, ValueError):
    """An operation restricted to integer data received non-integers."""

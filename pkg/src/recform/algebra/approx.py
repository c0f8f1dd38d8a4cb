"""Complex floating values with tracked error bounds.

All exactness claims in the package go through rational arithmetic; this type
only carries approximated roots and the factor vectors derived from them.
Bounds propagate conservatively: addition sums bounds, multiplication uses
|a|*db + |b|*da + da*db, and every operation adds one rounding ulp of the
result.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction

_EPS = sys.float_info.epsilon


def _as_approx(x) -> "ComplexApprox":
    if isinstance(x, ComplexApprox):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexApprox.from_exact(x)
    if isinstance(x, (float, complex)):
        z = complex(x)
        return ComplexApprox(z.real, z.imag, abs(z) * _EPS)
    raise TypeError(f"cannot interpret {type(x).__name__} as a complex approximation")


@dataclass(frozen=True)
class ComplexApprox:
    real: float
    imag: float
    error_bound: float

    def __post_init__(self):
        if not (self.error_bound >= 0.0 and self.error_bound < float("inf")):
            raise ValueError("error bound must be finite and nonnegative")

    @classmethod
    def from_exact(cls, value) -> "ComplexApprox":
        value = Fraction(value)
        f = float(value)
        bound = 0.0 if Fraction(f) == value else abs(f) * _EPS
        return cls(f, 0.0, bound)

    @classmethod
    def from_complex(cls, z: complex, bound: float) -> "ComplexApprox":
        return cls(z.real, z.imag, float(bound))

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    @property
    def is_zero(self) -> bool:
        return self.real == 0.0 and self.imag == 0.0

    def conjugate(self) -> "ComplexApprox":
        return ComplexApprox(self.real, -self.imag, self.error_bound)

    def modulus(self) -> float:
        return abs(self.value)

    def __neg__(self) -> "ComplexApprox":
        return ComplexApprox(-self.real, -self.imag, self.error_bound)

    def __add__(self, other) -> "ComplexApprox":
        other = _as_approx(other)
        z = self.value + other.value
        bound = self.error_bound + other.error_bound + abs(z) * _EPS
        return ComplexApprox(z.real, z.imag, bound)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexApprox":
        return self + (-_as_approx(other))

    def __rsub__(self, other) -> "ComplexApprox":
        return _as_approx(other) + (-self)

    def __mul__(self, other) -> "ComplexApprox":
        other = _as_approx(other)
        z = self.value * other.value
        bound = (
            abs(self.value) * other.error_bound
            + abs(other.value) * self.error_bound
            + self.error_bound * other.error_bound
            + abs(z) * _EPS
        )
        return ComplexApprox(z.real, z.imag, bound)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ComplexApprox":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = ComplexApprox.from_exact(1)
        for _ in range(n):
            result = result * self
        return result

    def deviation_from(self, other) -> float:
        """Distance of the carried value from an exact or approximate target."""
        if isinstance(other, ComplexApprox):
            return abs(self.value - other.value)
        return abs(self.value - complex(float(Fraction(other)), 0.0))

    def __str__(self) -> str:
        if self.imag == 0.0:
            return f"{self.real:.12g} (err<={self.error_bound:.2g})"
        return f"{self.real:.12g}{self.imag:+.12g}i (err<={self.error_bound:.2g})"

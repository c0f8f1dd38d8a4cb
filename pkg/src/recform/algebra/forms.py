"""Sparse homogeneous multivariate forms.

Terms map exponent vectors to nonzero coefficients; every stored vector sums
to the same total degree.  Iteration and rendering use graded-lexicographic
order with x1 > x2 > ... > xk, so equal-degree monomials come out in
descending lexicographic order of their exponent vectors.

Coefficients are Fractions for exact work; ComplexApprox coefficients are
accepted for approximate factor expansions (mixed arithmetic promotes to
ComplexApprox automatically).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import DimensionError
from .approx import ComplexApprox


def _is_zero_coeff(c) -> bool:
    if isinstance(c, ComplexApprox):
        return c.is_zero
    return c == 0


def exponent_vectors(arity: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    if arity == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in exponent_vectors(arity - 1, degree - first):
            out.append((first,) + rest)
    return out


class HomogeneousForm:
    __slots__ = ("arity", "degree", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], object] | Iterable):
        if arity < 1:
            raise DimensionError("arity must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[tuple[int, ...], object] = {}
        degree = None
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise DimensionError(f"bad exponent vector {exps} for arity {arity}")
            d = sum(exps)
            if degree is None:
                degree = d
            elif d != degree:
                raise DimensionError(f"mixed total degrees {degree} and {d}")
            if exps in collected:
                collected[exps] = collected[exps] + coeff
            else:
                collected[exps] = coeff
        collected = {e: c for e, c in collected.items() if not _is_zero_coeff(c)}
        self.arity = arity
        self.degree = degree if collected else None
        self.terms = collected

    @classmethod
    def zero(cls, arity: int) -> "HomogeneousForm":
        return cls(arity, {})

    @classmethod
    def one(cls, arity: int) -> "HomogeneousForm":
        return cls(arity, {(0,) * arity: Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HomogeneousForm":
        """Degree-1 form c1*x1 + ... + ck*xk."""
        arity = len(coeffs)
        terms = {}
        for u, c in enumerate(coeffs):
            exps = tuple(1 if i == u else 0 for i in range(arity))
            terms[exps] = c
        return cls(arity, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomogeneousForm)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.arity, tuple(self.items())))

    def __repr__(self) -> str:
        return f"HomogeneousForm({self.arity}, {dict(self.items())!r})"

    def _check_compatible(self, other: "HomogeneousForm", op: str) -> None:
        if self.arity != other.arity:
            raise DimensionError(f"{op} needs equal arity ({self.arity} vs {other.arity})")

    def __add__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        self._check_compatible(other, "addition")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DimensionError("cannot add forms of different degree")
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            merged[exps] = merged[exps] + c if exps in merged else c
        return HomogeneousForm(self.arity, merged)

    def __neg__(self) -> "HomogeneousForm":
        return HomogeneousForm(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        return self + (-other)

    def __mul__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        self._check_compatible(other, "multiplication")
        if self.is_zero or other.is_zero:
            return HomogeneousForm.zero(self.arity)
        out: dict[tuple[int, ...], object] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(a + b for a, b in zip(ea, eb))
                prod = ca * cb
                out[exps] = out[exps] + prod if exps in out else prod
        return HomogeneousForm(self.arity, out)

    def __pow__(self, n: int) -> "HomogeneousForm":
        if n < 0:
            raise ValueError("negative form powers are undefined")
        result = HomogeneousForm.one(self.arity)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "HomogeneousForm":
        if _is_zero_coeff(c):
            return HomogeneousForm.zero(self.arity)
        return HomogeneousForm(self.arity, {e: v * c for e, v in self.terms.items()})

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.arity:
            raise DimensionError(f"point length {len(point)} != arity {self.arity}")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value = value * x**e
            total += value
        return total

    def render(self, var_names: Sequence[str] | None = None) -> str:
        """Human-readable sparse rendering, canonical term order."""
        if self.is_zero:
            return "0"
        names = var_names or [f"x{i + 1}" for i in range(self.arity)]
        parts = []
        for exps, coeff in self.items():
            monomial = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exps) if e
            )
            if isinstance(coeff, ComplexApprox):
                body = f"({coeff})" + (f"*{monomial}" if monomial else "")
                parts.append(("+ " if parts else "") + body)
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not monomial:
                body = str(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{mag}*{monomial}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def expand_linear_factors(
    factors: Iterable[tuple[Sequence, int]], arity: int | None = None
) -> HomogeneousForm:
    """Fully expand prod_i (a_i . x)^(m_i) from (coefficient vector, multiplicity) pairs.

    Exact when every coefficient is rational; mixed inputs promote to
    ComplexApprox coefficients.
    """
    factors = list(factors)
    if arity is None:
        if not factors:
            raise DimensionError("cannot infer arity from an empty factor list")
        arity = len(factors[0][0])
    result = HomogeneousForm.one(arity)
    for coeffs, multiplicity in factors:
        if len(coeffs) != arity:
            raise DimensionError("all factor vectors must share one length")
        linear = HomogeneousForm.linear(list(coeffs))
        for _ in range(multiplicity):
            result = result * linear
    return result

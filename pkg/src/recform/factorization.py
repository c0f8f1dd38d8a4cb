"""Complete factorization of the family form into linear factors.

Root multiplicities come from exact square-free decomposition of the
characteristic polynomial, never from numeric clustering.  Rational roots are
extracted exactly (rational root test); the rest are approximated by
Aberth-Ehrlich simultaneous iteration with certified error bounds.

For each distinct root a with power row s = (1, a, a^2, ..., a^(k-1)) the
factor vector is s . G^(-1) (G = the family's initial matrix), and

    form_f = prod_i (factor_i . x)^(m_i)

exactly; the expansion is certified coefficient-wise against the built form.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence as SeqType

from .algebra import ComplexApprox, HomogeneousForm, UniPoly, expand_linear_factors
from .errors import CertificationError, DimensionError, PrecisionError
from .form_builder import build_form
from .recurrence import RecurrenceRelation, SequenceFamily

DEFAULT_PRECISION = 1e-12
DEFAULT_TOLERANCE = 1e-9

Coefficient = Fraction | ComplexApprox


@dataclass(frozen=True)
class RootDatum:
    """One distinct characteristic root with its exact multiplicity."""

    value: Coefficient
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)


@dataclass(frozen=True)
class LinearFactor:
    """One linear factor (coefficients . x) raised to its multiplicity."""

    coefficients: tuple[Coefficient, ...]
    multiplicity: int
    source_root: RootDatum

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coefficients)


@dataclass(frozen=True)
class Decomposition:
    """Linear factors whose expanded product certifies against a target form.

    residual is the largest per-coefficient deviation of the expansion from
    the target, each scaled by max(1, |target coefficient|); exactly 0.0 when
    every factor is exact.
    """

    factors: tuple[LinearFactor, ...]
    residual: float

    @property
    def is_exact(self) -> bool:
        return all(f.is_exact for f in self.factors)


# ---------------------------------------------------------------------------
# root finding


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(poly: UniPoly) -> tuple[list[Fraction], UniPoly]:
    """Split off all rational roots of a square-free polynomial, exactly."""
    roots: list[Fraction] = []
    # clear denominators to an integer polynomial for the rational root test
    while not poly.is_zero and poly.coefficient(0) == 0:
        roots.append(Fraction(0))
        poly = poly // UniPoly([0, 1])
    if poly.degree < 1:
        return roots, poly
    denom_lcm = 1
    for c in poly.coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in poly.coeffs]
    content = 0
    for v in ints:
        content = _gcd_int(content, v)
    ints = [v // content for v in ints]
    candidates = {
        Fraction(sign * p, q)
        for p in _divisors(ints[0])
        for q in _divisors(ints[-1])
        for sign in (1, -1)
    }
    for cand in sorted(candidates):
        if poly.eval(cand) == 0:
            roots.append(cand)
            poly = poly // UniPoly([-cand, 1])
    return roots, poly


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _horner(coeffs: list[complex], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _aberth(poly: UniPoly, precision: float, max_sweeps: int = 200) -> list[tuple[complex, float]]:
    """Simultaneous root iteration on a square-free polynomial.

    Starts from perturbed roots of unity scaled by the Cauchy bound; the
    certified per-root error estimate is |P(z)| / |P'(z)|.
    """
    coeffs = [float(c) for c in poly.coeffs]
    d = poly.degree
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    lead = abs(coeffs[-1])
    radius = 1.0 + max(abs(c) for c in coeffs[:-1]) / lead
    roots = [
        0.9 * radius * cmath.exp(2j * cmath.pi * (j + 0.35) / d + 0.41j) for j in range(d)
    ]
    bounds = [float("inf")] * d
    for _ in range(max_sweeps):
        moved = 0.0
        for j in range(d):
            z = roots[j]
            p = _horner(coeffs, z)
            dp = _horner(deriv, z)
            if dp == 0:
                roots[j] = z + (1e-8 + 1e-8j)
                moved = float("inf")
                continue
            w = p / dp
            repulsion = sum(1.0 / (z - roots[l]) for l in range(d) if l != j)
            denom = 1.0 - w * repulsion
            if denom == 0:
                roots[j] = z + (1e-8 - 1e-8j)
                moved = float("inf")
                continue
            step = w / denom
            roots[j] = z - step
            moved = max(moved, abs(step))
        bounds = []
        for z in roots:
            dp = _horner(deriv, z)
            bounds.append(abs(_horner(coeffs, z)) / abs(dp) if dp != 0 else float("inf"))
        if max(bounds) <= precision:
            break
        if moved < 1e-17 * max(1.0, radius):
            break
    if max(bounds) > precision:
        raise PrecisionError(
            f"root iteration did not reach error bound {precision:g} "
            f"within {max_sweeps} sweeps",
            best_bounds=tuple(bounds),
        )
    return [(z, b) for z, b in zip(roots, bounds)]


def _polish_real(coeffs: list[float], deriv: list[float], x: float) -> float:
    for _ in range(4):
        dp = _horner(deriv, x).real
        if dp == 0:
            break
        x = x - _horner(coeffs, x).real / dp
    return x


def _tidy_real_poly_roots(
    poly: UniPoly, raw: list[tuple[complex, float]]
) -> list[tuple[complex, float]]:
    """Snap near-real roots to the axis and enforce exact conjugate pairs."""
    coeffs = [float(c) for c in poly.coeffs]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    reals: list[tuple[complex, float]] = []
    uppers: list[tuple[complex, float]] = []
    for z, b in raw:
        if abs(z.imag) <= max(b, 1e-13 * (1.0 + abs(z))):
            x = _polish_real(coeffs, deriv, z.real)
            dp = _horner(deriv, x).real
            bound = abs(_horner(coeffs, x)) / abs(dp) if dp else b
            reals.append((complex(x, 0.0), bound))
        elif z.imag > 0:
            uppers.append((z, b))
    out = list(reals)
    for z, b in uppers:
        out.append((z, b))
        out.append((z.conjugate(), b))
    if len(out) != len(raw):  # pairing failed; fall back to the raw roots
        return raw
    return out


def char_roots(
    relation: RecurrenceRelation, precision: float = DEFAULT_PRECISION
) -> list[RootDatum]:
    """All characteristic roots with exact multiplicities.

    Rational roots are returned exactly; the others as ComplexApprox whose
    error bound is at most `precision`.
    """
    data: list[RootDatum] = []
    for factor, multiplicity in relation.char_poly().squarefree_decompose():
        rational, remainder = _rational_roots(factor)
        for r in rational:
            data.append(RootDatum(r, multiplicity))
        if remainder.degree >= 1:
            approx = _aberth(remainder, precision)
            approx = _tidy_real_poly_roots(remainder, approx)
            for z, bound in approx:
                data.append(RootDatum(ComplexApprox.from_complex(z, bound), multiplicity))
    data.sort(key=_root_sort_key)
    return data


def _root_sort_key(datum: RootDatum):
    if isinstance(datum.value, Fraction):
        return (0, float(datum.value), 0.0)
    return (1, datum.value.real, datum.value.imag)


# ---------------------------------------------------------------------------
# special-basis machinery


def _power_row(value: Coefficient, k: int) -> list[Coefficient]:
    row: list[Coefficient] = [Fraction(1) if isinstance(value, Fraction) else ComplexApprox.from_exact(1)]
    for _ in range(k - 1):
        row.append(row[-1] * value)
    return row


def special_basis_matrix(
    relation: RecurrenceRelation, roots: SeqType[RootDatum], start: int = 0
) -> tuple[tuple[Coefficient, ...], ...]:
    """Initial matrix of the basis sequences n^j * a_i^n, striped per root.

    Stripe i holds rows j = 0..m_i-1; the column at position t carries
    n^j * a_i^n for n = start + t (with 0^0 = 1).  start=1 yields the
    one-step-shifted grid.  Rational roots give exact entries.
    """
    k = relation.order
    if sum(r.multiplicity for r in roots) != k:
        raise DimensionError("root multiplicities must sum to the order")
    rows = []
    for datum in roots:
        powers = _power_row(datum.value, k + start)
        for j in range(datum.multiplicity):
            rows.append(
                tuple((Fraction(n) ** j) * powers[n] for n in range(start, start + k))
            )
    return tuple(rows)


def _binomial(u: int, v: int) -> int:
    out = 1
    for i in range(v):
        out = out * (u - i) // (i + 1)
    return out


def block_matrix_b(roots: SeqType[RootDatum]) -> tuple[tuple[Coefficient, ...], ...]:
    """Block-diagonal lower-triangular step matrix of the special basis.

    Block i is m_i x m_i with entry (u, v) = C(u, v) * a_i; its determinant is
    the product of the roots with multiplicity, i.e. the exponential base.
    """
    k = sum(r.multiplicity for r in roots)
    rows = [[Fraction(0)] * k for _ in range(k)]
    offset = 0
    for datum in roots:
        m = datum.multiplicity
        for u in range(m):
            for v in range(u + 1):
                rows[offset + u][offset + v] = _binomial(u, v) * datum.value
        offset += m
    return tuple(tuple(row) for row in rows)


# ---------------------------------------------------------------------------
# decomposition of the form


def certify_expansion(
    factors: SeqType[LinearFactor], target: HomogeneousForm, arity: int
) -> float:
    expanded = expand_linear_factors(
        [(f.coefficients, f.multiplicity) for f in factors], arity
    )
    exact = all(f.is_exact for f in factors)
    residual = 0.0
    for exps in set(expanded.terms) | set(target.terms):
        want = target.coefficient(exps)
        got = expanded.coefficient(exps)
        if exact:
            if got != want:
                residual = max(residual, abs(float(got - want)) / max(1.0, abs(float(want))))
            continue
        if isinstance(got, Fraction):
            got = ComplexApprox.from_exact(got)
        deviation = got.deviation_from(want)
        residual = max(residual, deviation / max(1.0, abs(float(want))))
    return residual


def _factor_vector(
    root: RootDatum, g_inverse, k: int
) -> tuple[Coefficient, ...]:
    powers = _power_row(root.value, k)
    cols = g_inverse.entries  # rational rows
    out = []
    for u in range(k):
        acc: Coefficient = Fraction(0)
        for i in range(k):
            acc = acc + powers[i] * cols[i][u]
        out.append(acc)
    return tuple(out)


def decompose_form(
    family: SequenceFamily,
    precision: float = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
) -> Decomposition:
    """Factor the family's form into linear factors and certify the expansion.

    Raises CertificationError when the expanded product deviates from the
    built form by more than `tolerance` per coefficient.
    """
    family.require_independent()
    k = family.order
    g_inverse = family.initial_matrix.inv()
    roots = char_roots(family.relation, precision)
    factors = tuple(
        LinearFactor(_factor_vector(r, g_inverse, k), r.multiplicity, r) for r in roots
    )
    target = build_form(family).form_f
    residual = certify_expansion(factors, target, k)
    if residual > tolerance:
        raise CertificationError(
            f"expanded factorization deviates from the form by {residual:g} "
            f"(> {tolerance:g})",
            residual=residual,
        )
    return Decomposition(factors=factors, residual=residual)


def orthonormal_factorization(
    relation: RecurrenceRelation,
    roots: SeqType[RootDatum] | None = None,
    precision: float = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
) -> Decomposition:
    """Factorization for the family with identity initial matrix.

    There the basis change degenerates and the factor for root a is exactly
    its power row (1, a, ..., a^(k-1)).
    """
    if roots is None:
        roots = char_roots(relation, precision)
    k = relation.order
    factors = tuple(
        LinearFactor(tuple(_power_row(r.value, k)), r.multiplicity, r) for r in roots
    )
    identity_rows = [[Fraction(i == j) for j in range(k)] for i in range(k)]
    target = build_form(SequenceFamily(relation, identity_rows)).form_f
    residual = certify_expansion(factors, target, k)
    if residual > tolerance:
        raise CertificationError(
            f"orthonormal factorization deviates by {residual:g} (> {tolerance:g})",
            residual=residual,
        )
    return Decomposition(factors=factors, residual=residual)

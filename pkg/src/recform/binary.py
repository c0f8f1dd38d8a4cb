"""Closed-form theory for pairs of second-order sequences.

With x_{n+1} = A x_n + B x_{n-1} and two sequences G, H sharing the rule, the
seven invariants below give the quadratic identity

    C_H * G_n^2 + C_GH * G_n H_n + C_G * H_n^2 = (-B)^n * Delta^2

together with its explicit splitting into two linear factors built from the
characteristic roots.  Everything here is computed directly from initial
terms, independent of the general form builder, so the two can cross-check
each other.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import HomogeneousForm
from .errors import DependentInitialsError, DimensionError
from .factorization import (
    DEFAULT_PRECISION,
    Decomposition,
    LinearFactor,
    certify_expansion,
    char_roots,
)
from .form_builder import FormPackage
from .recurrence import Sequence


@dataclass(frozen=True)
class BinaryInvariants:
    c_g: Fraction
    c_h: Fraction
    c_gh: Fraction
    e10: Fraction
    e01: Fraction
    delta: Fraction
    discriminant: Fraction


def _require_shared_binary(g: Sequence, h: Sequence) -> tuple[Fraction, Fraction]:
    if g.relation.order != 2 or h.relation.order != 2:
        raise DimensionError("binary invariants need order-2 sequences")
    if g.relation != h.relation:
        raise DimensionError("both sequences must share one relation")
    b, a = g.relation.gammas
    return a, b


def binary_invariants(g: Sequence, h: Sequence) -> BinaryInvariants:
    """All seven invariants of the pair, exactly."""
    a, b = _require_shared_binary(g, h)
    g0, g1 = g.initials
    h0, h1 = h.initials
    return BinaryInvariants(
        c_g=g1 * g1 - a * g0 * g1 - b * g0 * g0,
        c_h=h1 * h1 - a * h0 * h1 - b * h0 * h0,
        c_gh=-((g1 * h1 - a * g1 * h0 - b * g0 * h0) + (g1 * h1 - a * g0 * h1 - b * g0 * h0)),
        e10=g1 * h1 - a * g1 * h0 - b * g0 * h0,
        e01=g1 * h1 - a * g0 * h1 - b * g0 * h0,
        delta=g0 * h1 - g1 * h0,
        discriminant=a * a + 4 * b,
    )


def binary_form(g: Sequence, h: Sequence) -> FormPackage:
    """The quadratic identity as a FormPackage: C_H x^2 + C_GH xy + C_G y^2."""
    inv = binary_invariants(g, h)
    if inv.delta == 0:
        raise DependentInitialsError("the two sequences are linearly dependent (det = 0)")
    b = g.relation.gammas[0]
    f_tilde = HomogeneousForm(
        2, {(2, 0): inv.c_h, (1, 1): inv.c_gh, (0, 2): inv.c_g}
    )
    scale = inv.delta**2
    return FormPackage(
        form_f=f_tilde.scale(1 / scale),
        form_f_tilde=f_tilde,
        delta=inv.delta,
        base=-b,
        arity=2,
    )


def binary_decomposition(
    g: Sequence, h: Sequence, precision: float = DEFAULT_PRECISION
) -> Decomposition:
    """Split the scaled quadratic into its two explicit linear factors.

    Factor for root r is ((H1 - r*H0), -(G1 - r*G0)); the expanded product
    equals form_f_tilde, exactly when both roots are rational.
    """
    inv = binary_invariants(g, h)
    if inv.delta == 0:
        raise DependentInitialsError("the two sequences are linearly dependent (det = 0)")
    g0, g1 = g.initials
    h0, h1 = h.initials
    factors = []
    for datum in char_roots(g.relation, precision):
        r = datum.value
        first = h1 - r * h0
        second = -(g1 - r * g0)
        factors.append(LinearFactor((first, second), datum.multiplicity, datum))
    factors = tuple(factors)
    target = binary_form(g, h).form_f_tilde
    residual = certify_expansion(factors, target, 2)
    return Decomposition(factors=factors, residual=residual)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the classical identity suite over a range of indices."""

    checked_range: tuple[int, int]
    failures: tuple[tuple[str, int, Fraction, Fraction], ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures


def classical_identity_suite(g: Sequence, n_range: tuple[int, int]) -> IdentityReport:
    """Check the three classical quadratic identities plus the associated-pair facts.

    Everything is evaluated term-by-term from the sequences themselves; no
    form machinery is involved, so this is an independent oracle at order 2.
    """
    if g.relation.order != 2:
        raise DimensionError("the classical suite needs an order-2 sequence")
    b, a = g.relation.gammas
    assoc = g.associated()
    inv_self = binary_invariants(g, g)
    c_g = inv_self.c_g
    d = inv_self.discriminant
    lo, hi = n_range
    started = time.perf_counter()
    failures: list[tuple[str, int, Fraction, Fraction]] = []

    def check(name: str, n: int, lhs: Fraction, rhs: Fraction) -> None:
        if lhs != rhs:
            failures.append((name, n, lhs, rhs))

    for n in range(lo, hi + 1):
        gn = g.eval(n)
        gn1 = g.eval(n + 1)
        gm1 = g.eval(n - 1)
        an = assoc.eval(n)
        check("associated-square", n, an * an - d * gn * gn, 4 * c_g * (-b) ** n)
        check(
            "consecutive-terms", n, gn1 * gn1 - a * gn * gn1 - b * gn * gn, c_g * (-b) ** n
        )
        check(
            "second-difference", n, gm1 * gn1 - gn * gn, -c_g * (-b) ** (n - 1)
        )
    pair = binary_invariants(g, assoc)
    if pair.c_h != -d * c_g:
        failures.append(("associated-invariant", 0, pair.c_h, -d * c_g))
    if pair.c_gh != 0:
        failures.append(("associated-cross-term", 0, pair.c_gh, Fraction(0)))
    if pair.delta != -2 * c_g:
        failures.append(("associated-determinant", 0, pair.delta, -2 * c_g))
    return IdentityReport(
        checked_range=(lo, hi),
        failures=tuple(failures),
        elapsed=time.perf_counter() - started,
    )

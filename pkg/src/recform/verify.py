"""Exact identity verification, integer solution streams, and the fitting oracle.

The fitting oracle reconstructs the family form from nothing but evaluated
terms: it solves the exact linear system sum_e c_e * prod_u (term_u)^(e_u) =
base^n over all degree-k exponent vectors.  It shares no code with the form
builder, which makes it the independent cross-check of the whole pipeline.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .algebra import HomogeneousForm, exponent_vectors
from .errors import NonIntegralFamilyError, UnderdeterminedError
from .form_builder import FormPackage
from .recurrence import SequenceFamily


@dataclass(frozen=True)
class VerificationReport:
    checked_range: tuple[int, int]
    failures: tuple[tuple[int, Fraction, Fraction], ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        lo, hi = self.checked_range
        return hi - lo + 1


@dataclass(frozen=True)
class DiophantineSolution:
    """One integer point with form_f_tilde(point) = rhs = delta^k * base^n."""

    n: int
    point: tuple[int, ...]
    rhs: int


def verify_identity(
    family: SequenceFamily, package: FormPackage, n_range: tuple[int, int]
) -> VerificationReport:
    """Evaluate both sides exactly for every index in the inclusive range."""
    lo, hi = n_range
    started = time.perf_counter()
    failures = []
    for n in range(lo, hi + 1):
        point = family.eval(n)
        lhs = package.form_f.eval(point)
        rhs = package.base**n
        if lhs != rhs:
            failures.append((n, lhs, rhs))
    return VerificationReport(
        checked_range=(lo, hi),
        failures=tuple(failures),
        elapsed=time.perf_counter() - started,
    )


def diophantine_solutions(
    family: SequenceFamily,
    n_range: tuple[int, int],
    package: FormPackage | None = None,
) -> Iterator[DiophantineSolution]:
    """Stream the integer solutions produced by the family, self-checked.

    Requires an integral relation and integral initial values; every emitted
    point is asserted to satisfy form_f_tilde(point) = delta^k * base^n before
    it leaves this generator.  The form package is built on demand when not
    supplied.
    """
    if any(g.denominator != 1 for g in family.relation.gammas):
        raise NonIntegralFamilyError("relation coefficients must be integers")
    for row in family.initial_matrix.entries:
        if any(x.denominator != 1 for x in row):
            raise NonIntegralFamilyError("initial values must be integers")
    if package is None:
        from .form_builder import build_form

        package = build_form(family)
    scale = package.rhs_scale
    lo, hi = n_range
    for n in range(lo, hi + 1):
        point = family.eval(n)
        if any(x.denominator != 1 for x in point):
            raise NonIntegralFamilyError(
                f"family term at index {n} is not an integer"
            )
        rhs = scale * package.base**n
        if rhs.denominator != 1:
            raise NonIntegralFamilyError(f"right-hand side at index {n} is not an integer")
        value = package.form_f_tilde.eval(point)
        if value != rhs:
            raise AssertionError(
                f"solution self-check failed at n={n}: {value} != {rhs}"
            )
        yield DiophantineSolution(n=n, point=tuple(int(x) for x in point), rhs=int(rhs))


def oracle_fit_form(
    family: SequenceFamily, sample_ns: Iterable[int]
) -> HomogeneousForm:
    """Fit the degree-k form from evaluated terms alone, by exact linear solve.

    Needs at least as many distinct sample indices as there are degree-k
    monomials in k variables; raises UnderdeterminedError when the resulting
    system does not pin the coefficients down uniquely.
    """
    family.require_independent()
    k = family.order
    exps = exponent_vectors(k, k)
    unknowns = len(exps)
    samples = sorted(set(sample_ns))
    if len(samples) < unknowns:
        raise UnderdeterminedError(
            f"need at least {unknowns} distinct sample indices, got {len(samples)}"
        )
    base = family.relation.base
    rows = []
    for n in samples:
        point = family.eval(n)
        row = []
        for e in exps:
            value = Fraction(1)
            for x, p in zip(point, e):
                if p:
                    value *= x**p
            row.append(value)
        row.append(base**n)
        rows.append(row)
    solution = _solve_unique(rows, unknowns)
    return HomogeneousForm(k, {e: c for e, c in zip(exps, solution) if c != 0})


def _solve_unique(rows: list[list[Fraction]], unknowns: int) -> list[Fraction]:
    """Row-reduce an (possibly overdetermined) augmented system; demand rank = unknowns."""
    work = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(unknowns):
        pivot_row = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][col]
        work[r] = [x / pivot for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    if len(pivots) < unknowns:
        raise UnderdeterminedError(
            f"sample system has rank {len(pivots)} < {unknowns}; supply more indices"
        )
    for i in range(r, len(work)):
        if work[i][unknowns] != 0:
            raise ArithmeticError("inconsistent fitting system; family data is corrupt")
    solution = [Fraction(0)] * unknowns
    for i, col in enumerate(pivots):
        solution[col] = work[i][unknowns]
    return solution

"""Construction of the degree-k form attached to a sequence family.

For a family of k independent sequences the step matrix M satisfies
det(M^n) = base^n with base = (-1)^(k+1) * gamma_0.  Every entry of M^n is a
fixed linear combination of the family's terms at n, so det(M^n) expands into
a homogeneous degree-k form F with

    F(terms of the family at n) = base^n        for every integer n.

Two independent pipelines produce F: `build_form` resolves each entry
sequence of (M^n) against the family basis, `build_form_via_companion` reads
the linear combinations off the powers M^0..M^(k-1) column-wise.  The scaled
companion form_f_tilde = delta^k * F has integer coefficients whenever the
relation and initial values are integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import HomogeneousForm, RatMatrix
from .errors import DependentInitialsError
from .recurrence import Sequence, SequenceFamily


@dataclass(frozen=True)
class FormPackage:
    """The complete output of the construction.

    form_f_tilde equals form_f scaled by delta**arity; evaluating form_f at
    the family vector for index n gives base**n.
    """

    form_f: HomogeneousForm
    form_f_tilde: HomogeneousForm
    delta: Fraction
    base: Fraction
    arity: int

    @property
    def rhs_scale(self) -> Fraction:
        """The constant delta**arity multiplying base**n on the scaled side."""
        return self.delta**self.arity


class CoefficientTensor:
    """Coordinates c[i][j][u] expressing entry sequences of step-matrix powers.

    For all 0 <= n < k:  (M^n)[i][j] = sum_u c[i][j][u] * (term of sequence u
    at index n).  The same coordinates then hold for every n.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(tuple(Fraction(x) for x in ju) for ju in ij) for ij in entries)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int):
        return self.entries[i]

    def linear_form(self, i: int, j: int) -> HomogeneousForm:
        return HomogeneousForm.linear(self.entries[i][j])


def _step_matrix_powers(m: RatMatrix, count: int) -> list[RatMatrix]:
    powers = [RatMatrix.identity(m.n_rows)]
    for _ in range(count - 1):
        powers.append(powers[-1] * m)
    return powers


def linear_coefficients(family: SequenceFamily) -> CoefficientTensor:
    """Solve the k^2 linear systems expressing step-matrix entries in the family basis."""
    family.require_independent()
    k = family.order
    m = family.step_matrix()
    powers = _step_matrix_powers(m, k)
    basis = family.initial_matrix.transpose()  # columns are the initial rows
    entries = []
    for i in range(k):
        row = []
        for j in range(k):
            rhs = [powers[n][i][j] for n in range(k)]
            row.append(basis.solve(rhs))
        entries.append(row)
    return CoefficientTensor(entries)


def _symbolic_det(entries: list[list[HomogeneousForm]]) -> HomogeneousForm:
    """Determinant over the ring of forms, by cofactor expansion on the first row."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    arity = entries[0][0].arity
    acc = HomogeneousForm.zero(arity)
    for j in range(n):
        pivot = entries[0][j]
        if pivot.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = pivot * _symbolic_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _package(family: SequenceFamily, form_f: HomogeneousForm) -> FormPackage:
    k = family.order
    delta = family.delta()
    base = family.relation.base
    # det of the step matrix must reproduce the base; cheap internal sanity check
    assert family.step_matrix().det() == base
    return FormPackage(
        form_f=form_f,
        form_f_tilde=form_f.scale(delta**k),
        delta=delta,
        base=base,
        arity=k,
    )


def build_form(family: SequenceFamily) -> FormPackage:
    """Expand det(M^n) through the coefficient tensor of the family basis."""
    tensor = linear_coefficients(family)
    k = family.order
    grid = [[tensor.linear_form(i, j) for j in range(k)] for i in range(k)]
    return _package(family, _symbolic_det(grid))


def build_form_via_companion(family: SequenceFamily) -> FormPackage:
    """Alternative construction: same form, read off powers of the step matrix.

    Column j of the shifted initial grid at index n is M^j applied to the
    family vector at n, so the (i, j) entry is the linear form with the i-th
    row of M^j as coefficients; the determinant then carries one extra factor
    of delta.
    """
    delta = family.require_independent()
    k = family.order
    m = family.step_matrix()
    powers = _step_matrix_powers(m, k)
    grid = [
        [HomogeneousForm.linear(powers[j].row(i)) for j in range(k)] for i in range(k)
    ]
    return _package(family, _symbolic_det(grid).scale(1 / delta))


def cassini_form(sequence: Sequence) -> FormPackage:
    """Degree-k identity for one sequence and its k-1 shifts."""
    family = sequence.shifted_family()
    try:
        return build_form(family)
    except DependentInitialsError as exc:
        raise DependentInitialsError(
            "the shifted family of this sequence has linearly dependent "
            "initial rows (det = 0)"
        ) from exc

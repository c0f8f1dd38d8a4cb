"""Order-k linear recurrences, single sequences, and k-sequence families.

A relation (gamma_0, ..., gamma_{k-1}) defines x_{n+k} = gamma_{k-1} x_{n+k-1}
+ ... + gamma_0 x_n.  Since gamma_0 != 0 the recursion inverts, so sequences
extend to all integer indices.  A family stacks k sequences sharing one
relation; its k x k initial matrix (row i = initials of sequence i) is the
object everything downstream keys on.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence as SeqType

from .algebra import RatMatrix, UniPoly
from .errors import DependentInitialsError, DimensionError, MathPreconditionError


@dataclass(frozen=True)
class RecurrenceRelation:
    """The shared rule: gammas = (gamma_0, ..., gamma_{k-1}), gamma_0 != 0."""

    gammas: tuple[Fraction, ...]

    def __init__(self, gammas: SeqType):
        gammas = tuple(Fraction(g) for g in gammas)
        if len(gammas) < 2:
            raise MathPreconditionError("order must be at least 2")
        if gammas[0] == 0:
            raise MathPreconditionError("gamma_0 must be nonzero for an order-k relation")
        object.__setattr__(self, "gammas", gammas)

    @property
    def order(self) -> int:
        return len(self.gammas)

    @property
    def base(self) -> Fraction:
        """The value (-1)^(k+1) * gamma_0; equals det of the step matrix."""
        k = self.order
        return self.gammas[0] if k % 2 == 1 else -self.gammas[0]

    def char_poly(self) -> UniPoly:
        """x^k - gamma_{k-1} x^(k-1) - ... - gamma_0."""
        return UniPoly([-g for g in self.gammas] + [Fraction(1)])

    def companion_matrix(self) -> RatMatrix:
        """k x k matrix with subdiagonal ones and last column (gamma_0..gamma_{k-1})."""
        k = self.order
        rows = []
        for i in range(k):
            row = [Fraction(0)] * k
            if i > 0:
                row[i - 1] = Fraction(1)
            row[k - 1] = self.gammas[i]
            rows.append(row)
        return RatMatrix(rows)


class Sequence:
    """One sequence under a relation, evaluable at any integer index.

    Terms are cached in two growable windows (forward and backward); the cache
    is guarded by a lock so concurrent readers see serialized extension.
    """

    def __init__(self, relation: RecurrenceRelation, initials: SeqType):
        initials = tuple(Fraction(x) for x in initials)
        if len(initials) != relation.order:
            raise DimensionError(
                f"need {relation.order} initial values, got {len(initials)}"
            )
        self.relation = relation
        self.initials = initials
        self._forward = list(initials)  # terms 0, 1, 2, ...
        self._backward: list[Fraction] = []  # terms -1, -2, ...
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        ini = ", ".join(str(x) for x in self.initials)
        return f"Sequence(order={self.relation.order}, initials=({ini}))"

    def eval(self, n: int) -> Fraction:
        """Term at index n; forward recursion for n >= k, backward for n < 0."""
        with self._lock:
            if n >= 0:
                self._extend_forward(n)
                return self._forward[n]
            self._extend_backward(-n)
            return self._backward[-n - 1]

    __call__ = eval

    def _extend_forward(self, n: int) -> None:
        gammas = self.relation.gammas
        k = self.relation.order
        while len(self._forward) <= n:
            m = len(self._forward)
            term = sum(
                (gammas[j] * self._forward[m - k + j] for j in range(k)), Fraction(0)
            )
            self._forward.append(term)

    def _extend_backward(self, depth: int) -> None:
        gammas = self.relation.gammas
        k = self.relation.order
        while len(self._backward) < depth:
            m = -len(self._backward) - 1  # index being produced
            # x_m = (x_{m+k} - sum_{j>=1} gamma_j x_{m+j}) / gamma_0
            acc = self._term_unlocked(m + k)
            for j in range(1, k):
                acc -= gammas[j] * self._term_unlocked(m + j)
            self._backward.append(acc / gammas[0])

    def _term_unlocked(self, n: int) -> Fraction:
        if n >= 0:
            self._extend_forward(n)
            return self._forward[n]
        return self._backward[-n - 1]

    def associated(self) -> "Sequence":
        """For order 2: the companion sequence (2*G1 - A*G0, A*G1 + 2*B*G0)."""
        if self.relation.order != 2:
            raise DimensionError("associated sequences are defined for order 2 only")
        b, a = self.relation.gammas
        g0, g1 = self.initials
        return Sequence(self.relation, (2 * g1 - a * g0, a * g1 + 2 * b * g0))

    def shifted_family(self) -> "SequenceFamily":
        """Family whose row j holds the j-step shift of this sequence."""
        k = self.relation.order
        rows = [[self.eval(j + i) for i in range(k)] for j in range(k)]
        return SequenceFamily(self.relation, rows)


class SequenceFamily:
    """k sequences sharing one order-k relation, stacked as matrix rows."""

    def __init__(self, relation: RecurrenceRelation, initial_rows: SeqType):
        rows = [tuple(Fraction(x) for x in row) for row in initial_rows]
        k = relation.order
        if len(rows) != k or any(len(r) != k for r in rows):
            raise DimensionError(f"need a {k}x{k} grid of initial values")
        self.relation = relation
        self.initial_matrix = RatMatrix(rows)
        self.sequences = tuple(Sequence(relation, row) for row in rows)
        self._delta: Fraction | None = None

    @property
    def order(self) -> int:
        return self.relation.order

    def __repr__(self) -> str:
        return f"SequenceFamily(order={self.order}, initials={self.initial_matrix!r})"

    def delta(self) -> Fraction:
        """det of the initial matrix; the family is a basis iff nonzero."""
        if self._delta is None:
            self._delta = self.initial_matrix.det()
        return self._delta

    def require_independent(self) -> Fraction:
        d = self.delta()
        if d == 0:
            raise DependentInitialsError(
                "initial rows are linearly dependent (det = 0); "
                "the family does not span the solution space"
            )
        return d

    def eval(self, n: int) -> tuple[Fraction, ...]:
        """The column vector of all k sequences at index n."""
        return tuple(seq.eval(n) for seq in self.sequences)

    def shifted_initial_matrix(self) -> RatMatrix:
        """Initial matrix advanced one step: column j holds the vector at n = j+1."""
        k = self.order
        return RatMatrix([[seq.eval(j + 1) for j in range(k)] for seq in self.sequences])

    def step_matrix(self) -> RatMatrix:
        """The unique M with M . (vector at n) = (vector at n+1) for all n."""
        self.require_independent()
        return self.shifted_initial_matrix() * self.initial_matrix.inv()

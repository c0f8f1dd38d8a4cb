"""Dense exact matrices over the rationals.

Small and immutable: rows are tuples of Fractions.  Determinants use the
fraction-free Bareiss scheme (no intermediate blowup, still exact over a
field); inverses and solves use Gauss-Jordan elimination with the first
nonzero pivot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError, SingularMatrixError
from .unipoly import UniPoly


class RatMatrix:
    __slots__ = ("entries", "n_rows", "n_cols")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not entries:
            raise DimensionError("matrix needs at least one row")
        width = len(entries[0])
        if width == 0 or any(len(row) != width for row in entries):
            raise DimensionError("rows must be nonempty and of equal length")
        self.entries = entries
        self.n_rows = len(entries)
        self.n_cols = width

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.entries))

    def trace(self) -> Fraction:
        self._require_square("trace")
        return sum((self.entries[i][i] for i in range(self.n_rows)), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"RatMatrix([{rows}])"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.n_rows != other.n_rows or self.n_cols != other.n_cols:
            raise DimensionError("matrix addition needs equal shapes")
        return RatMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([x * c for x in row] for row in self.entries)

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise DimensionError(
                f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
            )
        cols = other.transpose().entries
        return RatMatrix(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
            for row in self.entries
        )

    def __rmul__(self, c) -> "RatMatrix":
        return self.scale(c)

    def __pow__(self, n: int) -> "RatMatrix":
        self._require_square("power")
        if n < 0:
            return self.inv() ** (-n)
        result = RatMatrix.identity(self.n_rows)
        for _ in range(n):
            result = result * self
        return result

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        vec = [Fraction(x) for x in vec]
        if len(vec) != self.n_cols:
            raise DimensionError("vector length must equal column count")
        return tuple(
            sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self.entries
        )

    def _require_square(self, what: str) -> None:
        if not self.is_square:
            raise DimensionError(f"{what} requires a square matrix, got {self.n_rows}x{self.n_cols}")

    def det(self) -> Fraction:
        """Exact determinant (Bareiss fraction-free elimination)."""
        self._require_square("determinant")
        n = self.n_rows
        if n == 1:
            return self.entries[0][0]
        a = [list(row) for row in self.entries]
        sign = 1
        prev = Fraction(1)
        for i in range(n - 1):
            if a[i][i] == 0:
                for r in range(i + 1, n):
                    if a[r][i] != 0:
                        a[i], a[r] = a[r], a[i]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            pivot = a[i][i]
            for r in range(i + 1, n):
                for c in range(i + 1, n):
                    a[r][c] = (a[r][c] * pivot - a[r][i] * a[i][c]) / prev
                a[r][i] = Fraction(0)
            prev = pivot
        return sign * a[n - 1][n - 1]

    def inv(self) -> "RatMatrix":
        """Exact inverse; raises SingularMatrixError when det = 0."""
        self._require_square("inverse")
        n = self.n_rows
        a = [list(row) + [Fraction(i == j) for j in range(n)] for i, row in enumerate(self.entries)]
        for i in range(n):
            pivot_row = next((r for r in range(i, n) if a[r][i] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError()
            a[i], a[pivot_row] = a[pivot_row], a[i]
            pivot = a[i][i]
            a[i] = [x / pivot for x in a[i]]
            for r in range(n):
                if r != i and a[r][i] != 0:
                    factor = a[r][i]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[i])]
        return RatMatrix(row[n:] for row in a)

    def solve(self, b: Sequence) -> tuple[Fraction, ...]:
        """Exact solution x of self * x = b."""
        self._require_square("solve")
        n = self.n_rows
        b = [Fraction(x) for x in b]
        if len(b) != n:
            raise DimensionError("right-hand side length must equal row count")
        a = [list(row) + [b[i]] for i, row in enumerate(self.entries)]
        for i in range(n):
            pivot_row = next((r for r in range(i, n) if a[r][i] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError()
            a[i], a[pivot_row] = a[pivot_row], a[i]
            pivot = a[i][i]
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    factor = a[r][i] / pivot
                    a[r] = [x - factor * y for x, y in zip(a[r], a[i])]
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = a[i][n] - sum((a[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
            x[i] = acc / a[i][i]
        return tuple(x)

    def char_poly(self) -> UniPoly:
        """Monic characteristic polynomial det(x*I - self), Faddeev-LeVerrier."""
        self._require_square("characteristic polynomial")
        n = self.n_rows
        coeffs_desc = [Fraction(1)]
        mk = self
        for k in range(1, n + 1):
            c = -mk.trace() / k
            coeffs_desc.append(c)
            if k < n:
                mk = self * (mk + RatMatrix.identity(n).scale(c))
        return UniPoly(list(reversed(coeffs_desc)))

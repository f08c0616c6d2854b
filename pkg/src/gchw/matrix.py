"""Exact square matrices over Python rationals.

Entries are plain ints or :class:`fractions.Fraction`; every operation is
exact, so identities like ``m @ m.inverse() == identity`` hold bit-for-bit.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ShapeError, SingularMatrixError


class SquareMatrix:
    """Immutable square matrix with exact rational entries."""

    __slots__ = ("order", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ShapeError("rows must form a nonempty square grid")
        self.order = n
        self.rows = rows

    @classmethod
    def identity(cls, order: int) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(order)] for i in range(order)])

    @classmethod
    def zeros(cls, order: int) -> "SquareMatrix":
        return cls([[0] * order for _ in range(order)])

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"SquareMatrix({[list(row) for row in self.rows]!r})"

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.order != other.order:
            raise ShapeError("orders differ")
        return SquareMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __rmul__(self, scalar) -> "SquareMatrix":
        return SquareMatrix([[scalar * x for x in row] for row in self.rows])

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.order != other.order:
            raise ShapeError("orders differ")
        n = self.order
        cols = list(zip(*other.rows))
        return SquareMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def det(self) -> Fraction:
        """Exact determinant by fraction-based Gaussian elimination."""
        n = self.order
        a = [[Fraction(x) for x in row] for row in self.rows]
        result = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                result = -result
            result *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    factor = a[r][col] * inv
                    for c in range(col, n):
                        a[r][c] -= factor * a[col][c]
        return result

    def inverse(self) -> "SquareMatrix":
        """Exact inverse by Gauss-Jordan elimination.

        Raises :class:`SingularMatrixError` when the determinant is zero.
        """
        n = self.order
        a = [[Fraction(x) for x in row] for row in self.rows]
        b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                b[col], b[pivot] = b[pivot], b[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - factor * y for x, y in zip(b[r], b[col])]
        return SquareMatrix(b)

    def is_integral(self) -> bool:
        return all(getattr(x, "denominator", 1) == 1 for row in self.rows for x in row)

    def dyadic_exponent(self) -> int:
        """Smallest e such that 2**e times every entry is an integer.

        Raises ValueError if some entry has a denominator that is not a
        power of two.
        """
        worst = 0
        for row in self.rows:
            for x in row:
                den = getattr(x, "denominator", 1)
                if den & (den - 1):
                    raise ValueError(f"entry {x!r} is not a dyadic rational")
                worst = max(worst, den.bit_length() - 1)
        return worst

"""Exact 2-D Haar transform via the lifting scheme.

One lifting step splits a signal into even/odd samples, predicts each odd
sample from its even neighbour (detail = odd - even), and updates the even
sample to keep the running average (approx = even + detail/2).  Working in
dyadic rationals keeps every step exactly invertible.

The 2-D transform is square-recursive: each level runs the lifting step
over the rows and then the columns of the active top-left sub-square, and
the next level recurses on the top-left quarter.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ShapeError
from .matrix import SquareMatrix


def lift_forward_1d(signal) -> tuple[list, list]:
    """One forward lifting step over an even-length signal.

    Returns (approx, detail) with detail[n] = s[2n+1] - s[2n] and
    approx[n] = s[2n] + detail[n]/2.
    """
    n = len(signal)
    if n == 0 or n % 2:
        raise ShapeError(f"signal length must be even and positive, got {n}")
    approx = []
    detail = []
    for k in range(0, n, 2):
        even = signal[k]
        d = signal[k + 1] - even
        detail.append(d)
        approx.append(even + Fraction(d, 2))
    return approx, detail


def lift_inverse_1d(approx, detail) -> list:
    """Exact inverse of :func:`lift_forward_1d`."""
    if len(approx) != len(detail) or not approx:
        raise ShapeError("approx and detail must have equal nonzero lengths")
    signal = []
    for a, d in zip(approx, detail):
        even = a - Fraction(d, 2)
        signal.append(even)
        signal.append(d + even)
    return signal


def _check_transform_args(order: int, levels: int) -> None:
    if order & (order - 1):
        raise ShapeError(f"matrix order must be a power of two, got {order}")
    if levels < 1:
        raise ShapeError(f"levels must be positive, got {levels}")
    if order < (1 << levels):
        raise ShapeError(f"order {order} is too small for {levels} levels")


def haar2d_forward(m: SquareMatrix, levels: int) -> SquareMatrix:
    """Multi-level 2-D Haar transform of a square matrix.

    Each level transforms the rows of the active sub-square (approx half
    left, detail half right), then its columns (approx top, detail bottom).
    """
    _check_transform_args(m.order, levels)
    grid = [list(row) for row in m.rows]
    side = m.order
    for _ in range(levels):
        for r in range(side):
            approx, detail = lift_forward_1d(grid[r][:side])
            grid[r][:side] = approx + detail
        for c in range(side):
            approx, detail = lift_forward_1d([grid[r][c] for r in range(side)])
            for r, value in enumerate(approx + detail):
                grid[r][c] = value
        side //= 2
    return SquareMatrix(grid)


def haar2d_inverse(m: SquareMatrix, levels: int) -> SquareMatrix:
    """Exact inverse of :func:`haar2d_forward` (columns first, then rows)."""
    _check_transform_args(m.order, levels)
    grid = [list(row) for row in m.rows]
    for level in range(levels, 0, -1):
        side = m.order >> (level - 1)
        half = side // 2
        for c in range(side):
            column = [grid[r][c] for r in range(side)]
            for r, value in enumerate(lift_inverse_1d(column[:half], column[half:])):
                grid[r][c] = value
        for r in range(side):
            row = grid[r][:side]
            grid[r][:side] = lift_inverse_1d(row[:half], row[half:])
    return SquareMatrix(grid)

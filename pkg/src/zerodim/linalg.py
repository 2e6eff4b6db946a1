"""Exact linear algebra over Q on integer row representations.

Rows are scaled to primitive integer vectors, and elimination is
cross-multiplying (fraction-free) with the pivot of largest magnitude,
ties broken by the lower row index.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence

from .poly import as_scalar


def _int_row(row) -> list[int]:
    row = [Fraction(v) for v in row]
    den = reduce(lcm, (v.denominator for v in row), 1)
    return [int(v * den) for v in row]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [v // g for v in row]
    return row


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form with integer rows.

    Returns ``(rows, pivots)``: only the nonzero rows, each primitive with a
    positive pivot entry, and the pivot column of each row. Pivot columns
    are zero in every other row.
    """
    rows = [_primitive(_int_row(r)) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(rows)):
            v = abs(rows[i][col])
            if v and (best is None or v > abs(rows[best][col])):
                best = i
        if best is None:
            continue
        rows[top], rows[best] = rows[best], rows[top]
        prow = rows[top]
        if prow[col] < 0:
            prow = [-v for v in prow]
            rows[top] = prow
        p = prow[col]
        for i in range(len(rows)):
            if i != top and rows[i][col]:
                e = rows[i][col]
                g = gcd(p, e)
                a, b = p // g, e // g
                rows[i] = _primitive([a * x - b * y for x, y in zip(rows[i], prow)])
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list]:
    """A rational solution of ``matrix @ x = rhs`` with free variables set to 0.

    Returns None when the system is inconsistent.
    """
    m = len(matrix)
    if m != len(rhs):
        raise ValueError("row count mismatch")
    if m == 0:
        return []
    ncols = len(matrix[0])
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x: list = [0] * ncols
    for row, col in zip(rows, pivots):
        x[col] = as_scalar(Fraction(row[-1], row[col]))
    return x


def nullspace(matrix: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[int]]:
    """Basis of the right kernel as primitive integer vectors.

    One vector per free column, in increasing column order; the first
    nonzero entry of each vector is positive.
    """
    if not matrix:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(rows, pivots):
            vec[pc] = Fraction(-row[fc], row[pc])
        ints = _primitive(_int_row(vec))
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = [-v for v in ints]
        basis.append(ints)
    return basis


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational square matrix."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    scale = Fraction(1)
    ints = []
    for r in rows:
        den = reduce(lcm, (v.denominator for v in r), 1)
        scale /= den
        ints.append([int(v * den) for v in r])
    return as_scalar(det_bareiss(ints) * scale)


def cramer(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[int, list[int]]:
    """Cramer's rule on an integer system: ``(det A, [det A_j])``.

    The solution is ``x_j = det A_j / det A``.
    """
    d = det_bareiss(matrix)
    n = len(matrix)
    nums = []
    for j in range(n):
        replaced = [[rhs[i] if c == j else matrix[i][c] for c in range(n)] for i in range(n)]
        nums.append(det_bareiss(replaced))
    return d, nums

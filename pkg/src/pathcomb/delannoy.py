"""Delannoy numbers and exact determinant evaluation.

delannoy(i, j) counts the paths from (i, 0) to (0, j) using the same three
steps as the path families.  The matrix of these numbers has determinant
2^(n(n-1)/2), which the unitriangular reduction verify_reduction exposes
as an exact block identity.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]

_table: dict[tuple[int, int], int] = {}


def delannoy(i: int, j: int) -> int:
    """Number of paths from (i, 0) to (0, j): a(i,0) = a(0,j) = 1 and
    a(i+1,j+1) = a(i,j+1) + a(i+1,j) + a(i,j).  Memoized, grows on demand."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    got = _table.get((i, j))
    if got is not None:
        return got
    for a in range(i + 1):
        for b in range(j + 1):
            if (a, b) not in _table:
                _table[(a, b)] = (1 if a == 0 or b == 0 else
                                  _table[(a - 1, b)] + _table[(a, b - 1)] + _table[(a - 1, b - 1)])
    return _table[(i, j)]


def delannoy_matrix(n: int) -> Matrix:
    """The upper-left n x n block of the Delannoy table."""
    return tuple(tuple(delannoy(i, j) for j in range(n)) for i in range(n))


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate quotient is an exact integer division; row swaps
    flip the sign.  The empty matrix has determinant 1.
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for r in range(k + 1, n):
            row = a[r]
            ark = row[k]
            for c in range(k + 1, n):
                row[c] = (row[c] * pk - ark * row_k[c]) // prev
            row[k] = 0
        prev = pk
    return sign * a[-1][-1]


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = _transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def verify_reduction(n: int) -> bool:
    """Check the unitriangular conjugation identity at order n.

    With E the identity plus -1 directly above the diagonal, E^T A E must
    equal the block matrix [[1, 0], [0, 2*A']] where A' is the order n-1
    Delannoy matrix.  Exact equality; n >= 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    a = delannoy_matrix(n)
    e = tuple(tuple(1 if i == j else (-1 if j == i + 1 else 0) for j in range(n))
              for i in range(n))
    m = _matmul(_matmul(_transpose(e), a), e)
    if m[0][0] != 1:
        return False
    for t in range(1, n):
        if m[0][t] != 0 or m[t][0] != 0:
            return False
    for i in range(1, n):
        for j in range(1, n):
            if m[i][j] != 2 * delannoy(i - 1, j - 1):
                return False
    return True

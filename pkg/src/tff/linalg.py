"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are anything ``Fraction`` accepts.
Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def row_echelon(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = to_fractions(m)
    if not a:
        return a, []
    n_rows, n_cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination on an integer-scaled copy."""
    rows = [list(r) for r in to_fractions(m)]
    if not rows or not rows[0]:
        return 0
    # clear denominators row by row so the elimination stays in Z
    ints = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        ints.append([int(x * den) for x in row])
    n_rows, n_cols = len(ints), len(ints[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if ints[i][c] != 0), None)
        if piv is None:
            continue
        ints[r], ints[piv] = ints[piv], ints[r]
        p = ints[r][c]
        for i in range(r + 1, n_rows):
            f = ints[i][c]
            ints[i] = [(p * x - f * y) // prev for x, y in zip(ints[i], ints[r])]
        prev = p
        r += 1
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``a x = b``, or None when the system is inconsistent."""
    n_cols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = row_echelon(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = red[i][n_cols]
    return x


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(a: Sequence[Sequence]) -> Matrix:
    """Basis of the right kernel."""
    if not a:
        return []
    n_cols = len(a[0])
    red, pivots = row_echelon(a)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]

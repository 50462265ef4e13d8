"""Exact rational linear algebra: fraction-free rank, nullspace, solving.

Matrices are lists of rows; entries are ints or Fractions.  Rank uses
fraction-free (Bareiss) elimination on denominator-cleared integer rows with
pivoting by largest absolute value, which keeps intermediate growth bounded
by minors of the input.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for a in row:
            if isinstance(a, Fraction):
                den = den * a.denominator // gcd(den, a.denominator)
        out.append([int(a * den) if isinstance(a, Fraction) else a * den for a in row])
    return out


def rank(rows):
    """Rank over QQ via fraction-free elimination."""
    m = _integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        best = 0
        for i in range(r, nrows):
            a = abs(m[i][col])
            if a > best:
                best = a
                piv = i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[r]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * p - row_r[j] * a) // prev
        prev = p
        r += 1
    return r


def det(matrix):
    """Exact determinant (square matrix)."""
    n = len(matrix)
    m = [[Fraction(a) for a in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for i in range(col + 1, n):
            f = m[i][col] / p
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return result * sign


def rref(rows):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [[Fraction(a) for a in row] for row in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [a / p for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def nullspace(rows, ncols=None):
    """Basis of {x : rows . x = 0} as tuples of Fractions."""
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer column count from an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -m[r][free]
        basis.append(tuple(vec))
    return basis


def solve_unique(rows, rhs):
    """Solve rows . x = rhs; returns (solution tuple, unique flag) or None.

    None signals an inconsistent system; unique is False when the solution
    space is positive-dimensional (a particular solution is still returned).
    """
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = m[r][ncols]
    unique = len(pivots) == ncols
    return tuple(x), unique


def in_row_span(rows, vector):
    """True when vector is a QQ-linear combination of the rows."""
    if not rows:
        return all(a == 0 for a in vector)
    base = rank(rows)
    return rank(list(rows) + [list(vector)]) == base


def mat_mul(a, b):
    """Matrix product with Fraction entries."""
    if not a or not b:
        return []
    ncols = len(b[0])
    inner = len(b)
    return [
        [sum((Fraction(row[k]) * b[k][j] for k in range(inner)), Fraction(0)) for j in range(ncols)]
        for row in a
    ]


def invert(matrix):
    """Exact inverse of a square matrix; None when singular."""
    n = len(matrix)
    aug = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in m]

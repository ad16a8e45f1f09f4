"""Exact linear algebra over Q.

Matrices are plain lists of rows. Entries may be ``int``, ``Fraction`` or
rational strings; every routine first clears denominators row by row and
then works fraction-free on Python integers.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Optional, Sequence

from .ratpoly import as_rational

Matrix = List[List[Fraction]]


def to_rational_matrix(rows) -> Matrix:
    rows = [[as_rational(v) for v in row] for row in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def _integer_rows(rows) -> List[List[int]]:
    out = []
    for row in to_rational_matrix(rows):
        d = reduce(lcm, (q.denominator for q in row), 1)
        out.append([int(q * d) for q in row])
    return out


def _primitive(vec: List[int]) -> List[int]:
    g = reduce(gcd, vec, 0)
    return [v // g for v in vec] if g > 1 else vec


def rank(rows) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Pivots: columns left to right, first row (smallest index) with a nonzero
    entry at or below the current pivot row.
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((k for k in range(r, nrows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for k in range(r + 1, nrows):
            a = m[k][c]
            row_k = m[k]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_k[j] = (p * row_k[j] - a * row_r[j]) // prev
            row_k[c] = 0
        prev = p
        r += 1
    return r


def det(rows) -> Fraction:
    """Determinant of a square rational matrix (Bareiss)."""
    q = to_rational_matrix(rows)
    n = len(q)
    if any(len(row) != n for row in q):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in q:
        d = reduce(lcm, (v.denominator for v in row), 1)
        scale *= d
        m.append([int(v * d) for v in row])
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((k for k in range(c, n) if m[k][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        for k in range(c + 1, n):
            a = m[k][c]
            for j in range(c + 1, n):
                m[k][j] = (p * m[k][j] - a * m[c][j]) // prev
            m[k][c] = 0
        prev = p
    return Fraction(sign * m[n - 1][n - 1]) / scale


def nullspace(rows, ncols: Optional[int] = None) -> List[List[int]]:
    """Integer primitive basis of the right kernel ``{v : M v = 0}``.

    Fraction-free Gauss-Jordan with columns scanned right to left, so
    dependent variables are the highest-indexed ones and free variables
    keep their lowest indices. Basis vectors are ordered by free column
    (ascending); each has a positive entry at its own free column and zero
    at every other free column.
    """
    m = _integer_rows(rows)
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(m[0])
    nrows = len(m)
    pivots = {}  # column -> row
    r = 0
    for c in reversed(range(ncols)):
        if r == nrows:
            break
        piv = next((k for k in range(r, nrows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for k in range(nrows):
            if k != r and m[k][c]:
                a = m[k][c]
                m[k] = _primitive([p * x - a * y for x, y in zip(m[k], m[r])])
        m[r] = _primitive(m[r])
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        pivots[c] = r
        r += 1
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        scale = reduce(lcm, (m[pr][pc] for pc, pr in pivots.items()), 1)
        vec = [0] * ncols
        vec[f] = scale
        for pc, pr in pivots.items():
            vec[pc] = -m[pr][f] * scale // m[pr][pc]
        vec = _primitive(vec)
        basis.append(vec)
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> List[Fraction]:
    """Unique coordinates ``c`` with ``sum_k c[k] * columns[k] == target``.

    ``columns`` must be linearly independent. Raises ``ValueError`` when the
    target is outside their span.
    """
    cols = [to_rational_matrix([col])[0] for col in columns]
    tgt = [as_rational(v) for v in target]
    n = len(tgt)
    if any(len(col) != n for col in cols):
        raise ValueError("column length does not match target")
    k = len(cols)
    # augmented system, one row per ambient coordinate
    aug = [[cols[j][i] for j in range(k)] + [tgt[i]] for i in range(n)]
    r = 0
    where = [-1] * k
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [v / p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[r])]
        where[c] = r
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        raise ValueError("target is not in the span of the columns")
    return [aug[where[c]][k] for c in range(k)]


def matmul(a, b) -> Matrix:
    a = to_rational_matrix(a)
    b = to_rational_matrix(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)] for row in a]


def transpose(m) -> Matrix:
    return [list(col) for col in zip(*m)]

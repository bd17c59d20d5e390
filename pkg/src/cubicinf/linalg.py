"""Exact dense linear algebra over any field whose elements support + - * /.

Pivoting is deterministic: the first nonzero entry in column order wins.
"""
from __future__ import annotations

from fractions import Fraction


def _is_zero(x) -> bool:
    return x == 0


def row_echelon(rows):
    """Return (reduced rows, pivot columns) of the reduced row echelon form."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not _is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], int) else Fraction(1, m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(m):
    m = [list(r) for r in m]
    n = len(m)
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if not _is_zero(m[i][c])), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        acc = acc * m[c][c]
        for i in range(c + 1, n):
            if not _is_zero(m[i][c]):
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return acc * sign


def inverse(m):
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def matvec(a, v):
    return [sum((a[i][k] * v[k] for k in range(len(v))), Fraction(0)) for i in range(len(a))]


def solve(a, b):
    """Solve the square system a x = b exactly (a invertible)."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    red, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [row[n] for row in red]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

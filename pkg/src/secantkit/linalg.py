"""Exact linear algebra over the rationals (small dense matrices as lists of rows)."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def _rref(rows: Sequence[Sequence]) -> tuple:
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_rref(rows)[1])


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> list:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = _rref(rows)
    ncols = len(m[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> Optional[list]:
    """Coefficients c with sum_k c_k * columns[k] == target, or None if inconsistent."""
    k = len(columns)
    n = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    m, pivots = _rref(aug)
    if k in pivots:
        return None
    sol = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        sol[c] = m[r][k]
    return sol


def row_basis(vectors: Sequence[Sequence]) -> list:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen, rows = [], []
    for i, v in enumerate(vectors):
        if rank(rows + [list(v)]) > len(rows):
            rows.append(list(v))
            chosen.append(i)
    return chosen

"""Exact linear algebra over a coefficient field.

Matrices are lists of rows of Scalars.  Elimination divides by exact pivots,
so every result is exact; there are no thresholds anywhere.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .scalars import Field, Scalar


def _copy(mat):
    return [list(row) for row in mat]


def _eliminate(field: Field, mat):
    """Row echelon form in place; returns the list of pivot column indices."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not mat[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and not mat[i][c].is_zero():
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(field: Field, mat) -> int:
    if not mat:
        return 0
    work = _copy(mat)
    return len(_eliminate(field, work))


def kernel_basis(field: Field, mat) -> list[list[Scalar]]:
    """Basis of the right kernel {v : mat v = 0}."""
    if not mat:
        return []
    cols = len(mat[0])
    work = _copy(mat)
    pivots = _eliminate(field, work)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero] * cols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def solve_matrix(field: Field, a, b):
    """Solve A X = B exactly for square A; raises when A is singular."""
    n = len(a)
    width = len(b[0])
    work = [list(a[i]) + list(b[i]) for i in range(n)]
    pivots = _eliminate(field, work)
    if len(pivots) != n or pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n : n + width] for row in work]


def invert(field: Field, a):
    n = len(a)
    ident = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    return solve_matrix(field, a, ident)


def is_generalized_permutation(field: Field, mat) -> bool:
    """True when every row and every column has exactly one nonzero entry."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        return False
    col_seen = [0] * n
    for row in mat:
        nonzero = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(nonzero) != 1:
            return False
        col_seen[nonzero[0]] += 1
    return all(k == 1 for k in col_seen)

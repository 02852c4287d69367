"""Exact linear algebra over the rationals.

Vectors are either dense lists or sparse dicts index -> value; entries are
ints or Fractions. Everything here is small and written for clarity over
speed: the module dimensions we meet stay in the low hundreds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

SparseVec = dict


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                row_r = mat[r]
                mat[i] = [a - f * b for a, b in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(sparse_echelon(to_sparse(row) for row in rows))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def to_sparse(vec: Sequence) -> SparseVec:
    return {i: x for i, x in enumerate(vec) if x != 0}


def to_dense(vec: SparseVec, n: int) -> list:
    out = [0] * n
    for i, x in vec.items():
        out[i] = x
    return out


def axpy(y: SparseVec, a, x: SparseVec) -> None:
    """y += a*x in place, dropping zeros."""
    for i, v in x.items():
        w = y.get(i, 0) + a * v
        if w:
            y[i] = w
        else:
            y.pop(i, None)


def sparse_echelon(vectors: Iterable[SparseVec]) -> dict[int, SparseVec]:
    """Incremental Gaussian elimination.

    Returns pivot column -> row, each row normalised to 1 at its pivot and
    free of the other pivots' columns only partially (echelon, not reduced).
    The number of rows is the rank of the input.
    """
    basis: dict[int, SparseVec] = {}
    for vec in vectors:
        vec = reduce_against(dict(vec), basis)
        if vec:
            p = min(vec)
            inv = Fraction(1) / vec[p]
            basis[p] = {i: x * inv for i, x in vec.items()}
    return basis


def reduce_against(vec: SparseVec, basis: dict[int, SparseVec]) -> SparseVec:
    """Reduce vec in place modulo an echelon basis from sparse_echelon."""
    while True:
        hit = [c for c in vec if c in basis]
        if not hit:
            return vec
        c = min(hit)
        axpy(vec, -vec[c], basis[c])


def reduced_basis(vectors: Iterable[SparseVec]) -> dict[int, SparseVec]:
    """Fully reduced echelon basis: each pivot column appears in one row only."""
    basis = sparse_echelon(vectors)
    for p in sorted(basis, reverse=True):
        row = basis[p]
        for q in sorted(basis):
            if q < p and p in basis[q]:
                axpy(basis[q], -basis[q][p], row)
    return basis


def coordinates(vec: SparseVec, basis: dict[int, SparseVec]) -> dict[int, Fraction] | None:
    """Coordinates of vec in a reduced basis (keyed by pivot), or None if outside."""
    rest = dict(vec)
    coords = {}
    for p in sorted(basis):
        c = rest.get(p, 0)
        if c:
            coords[p] = c
            axpy(rest, -c, basis[p])
    return None if rest else coords


def mat_vec(cols: Sequence[SparseVec], vec: SparseVec) -> SparseVec:
    """Matrix stored by sparse columns, applied to a sparse vector."""
    out: SparseVec = {}
    for j, x in vec.items():
        axpy(out, x, cols[j])
    return out


def mat_mul(a: Sequence[SparseVec], b: Sequence[SparseVec]) -> list[SparseVec]:
    return [mat_vec(a, col) for col in b]


def identity(n: int) -> list[SparseVec]:
    return [{i: 1} for i in range(n)]


def dense_columns(cols: Sequence[SparseVec], n: int) -> list[list]:
    """Row-major dense matrix from sparse columns."""
    out = [[0] * len(cols) for _ in range(n)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out

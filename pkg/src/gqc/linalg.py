"""Dense matrices over GF(q) as lists of integer rows."""

from __future__ import annotations

from typing import Sequence

from .field import GF

Matrix = list[list[int]]


def copy_matrix(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(r) for r in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def gauss_echelon(field: GF, M: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Echelon canonical form (reduced row echelon form) and its pivot columns.

    Forward elimination picks the topmost nonzero entry of the leftmost
    remaining column; back substitution then runs bottom-up so each pivot
    row only carries entries in non-pivot columns.  Zero rows are dropped.
    """
    f = field
    E = [r for r in copy_matrix(M) if any(r)]
    ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    cur = 0
    for col in range(ncols):
        if cur == len(E):
            break
        r = next((i for i in range(cur, len(E)) if E[i][col]), None)
        if r is None:
            continue
        if r != cur:
            E[cur], E[r] = E[r], E[cur]
        prow = E[cur]
        piv = prow[col]
        if piv != 1:
            inv = f.inv(piv)
            for c in range(col + 1, ncols):
                if prow[c]:
                    prow[c] = f.mul(prow[c], inv)
            prow[col] = 1
        nz = [c for c in range(col + 1, ncols) if prow[c]]
        for i in range(cur + 1, len(E)):
            row = E[i]
            factor = row[col]
            if not factor:
                continue
            for c in nz:
                row[c] = f.sub(row[c], f.mul(factor, prow[c]))
            row[col] = 0
        pivots.append(col)
        cur += 1
    E = E[:cur]
    for i in range(cur - 1, -1, -1):
        col = pivots[i]
        prow = E[i]
        nz = [c for c in range(col + 1, ncols) if prow[c]]
        for k in range(i):
            row = E[k]
            factor = row[col]
            if not factor:
                continue
            for c in nz:
                row[c] = f.sub(row[c], f.mul(factor, prow[c]))
            row[col] = 0
    return E, pivots


def rank(field: GF, M: Sequence[Sequence[int]]) -> int:
    if not M:
        return 0
    return len(gauss_echelon(field, M)[1])


def nullspace(field: GF, M: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis (as rows) of {x : M x^T = 0}."""
    if not M or not any(any(r) for r in M):
        return identity(ncols)
    E, pivots = gauss_echelon(field, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(E, pivots):
            if row[fc]:
                v[pc] = field.neg(row[fc])
        basis.append(v)
    return basis


def mul_transpose(field: GF, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    """A * B^T."""
    f = field
    out = []
    for a in A:
        row = []
        for b in B:
            acc = 0
            for x, y in zip(a, b):
                if x and y:
                    acc = f.add(acc, f.mul(x, y))
            row.append(acc)
        out.append(row)
    return out


def matmul(field: GF, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    return mul_transpose(field, A, transpose(B))


def is_zero(M: Sequence[Sequence[int]]) -> bool:
    return not any(any(r) for r in M)

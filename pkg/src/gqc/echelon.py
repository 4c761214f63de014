"""Gröbner basis of a GQC code from a parity-check matrix via its echelon form.

Pipeline: echelon canonical form of H, column permutation into standard form
[I | A], the dual generator [-A^T | I] permuted back, then Buchberger on its
rows and reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import OrbitProfile, vec_to_polyvec
from .field import GF
from .grobner import GrobnerBasis, Ordering, buchberger, reduce_basis
from .linalg import Matrix, gauss_echelon


@dataclass(frozen=True)
class Permutation:
    """Column permutation: new column ``c`` takes old column ``order[c]``."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"not a permutation: {self.order}")

    def apply(self, M: Sequence[Sequence[int]]) -> Matrix:
        return [[row[o] for o in self.order] for row in M]

    def undo(self, M: Sequence[Sequence[int]]) -> Matrix:
        out = []
        for row in M:
            new = [0] * len(self.order)
            for c, o in enumerate(self.order):
                new[o] = row[c]
            out.append(new)
        return out

    def inverse(self) -> Permutation:
        inv = [0] * len(self.order)
        for c, o in enumerate(self.order):
            inv[o] = c
        return Permutation(tuple(inv))


def standard_form(E: Sequence[Sequence[int]], pivots: Sequence[int]) -> tuple[Matrix, Permutation]:
    """Move pivot columns to the front: tau(E) = [I | A].  Returns (A, tau)."""
    n = len(E[0]) if E else 0
    piv = set(pivots)
    tau = Permutation(tuple(pivots) + tuple(c for c in range(n) if c not in piv))
    r = len(pivots)
    A = [row[r:] for row in tau.apply(E)]
    return A, tau


def dual_generator(field: GF, A: Sequence[Sequence[int]], tau: Permutation) -> Matrix:
    """tau^{-1}([-A^T | I_{n-r}]): a generator matrix of the dual code."""
    r = len(A)
    n = len(tau.order)
    k = n - r
    rows = []
    for i in range(k):
        row = [field.neg(A[j][i]) if A[j][i] else 0 for j in range(r)]
        row += [int(i == c) for c in range(k)]
        rows.append(row)
    return tau.undo(rows)


@dataclass(frozen=True)
class EchelonRun:
    echelon: Matrix
    pivots: list[int]
    A: Matrix
    tau: Permutation
    generator: Matrix
    unreduced: GrobnerBasis
    basis: GrobnerBasis


def echelon_pipeline(
    H: Sequence[Sequence[int]], profile: OrbitProfile, reduce: bool = True
) -> EchelonRun:
    f = profile.field
    if any(len(r) != profile.n for r in H):
        raise ValueError(f"parity-check rows must have length {profile.n}")
    E, pivots = gauss_echelon(f, H)
    A, tau = standard_form(E, pivots)
    G = dual_generator(f, A, tau)
    rows = [vec_to_polyvec(g, profile) for g in G]
    B0 = buchberger(rows, profile, Ordering.POT)
    B = reduce_basis(B0) if reduce else B0
    return EchelonRun(E, pivots, A, tau, G, B0, B)


def algorithm1(
    H: Sequence[Sequence[int]], profile: OrbitProfile, reduce: bool = True
) -> GrobnerBasis:
    """POT Gröbner basis of the code with parity-check matrix H."""
    return echelon_pipeline(H, profile, reduce).basis

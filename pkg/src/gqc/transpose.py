"""Gröbner basis of a GQC code from the rPOT basis of its dual.

If ``h`` is the reduced rPOT basis of the dual closure, the lower-triangular
matrix A with A * h = diag(t^{l_i} - 1) is found by exact polynomial
division.  Its "hat-transpose" B (b_ij = hat(a_ji)) generates the code; a
power of t on each row turns B into the upper-triangular POT basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import OrbitProfile, PolyVec, polyvec_to_vec, scalar_product, shift_sigma, vec_to_polyvec
from .field import suspended
from .grobner import GrobnerBasis, Ordering, buchberger, reduce_basis
from .linalg import Matrix
from .poly import Poly


class InexactDivisionError(ArithmeticError):
    def __init__(self, i: int, j: int):
        super().__init__(f"inexact division while computing a_{i + 1}{j + 1}")
        self.i = i
        self.j = j


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[Poly, ...], ...]
    profile: OrbitProfile

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> PolyVec:
        return PolyVec(self.entries[i], self.profile)

    def __str__(self) -> str:
        return "\n".join("  ".join(str(p) for p in row) for row in self.entries)


def compute_A(H: GrobnerBasis, check: bool = True) -> PolyMatrix:
    """Lower-triangular A with A * h = diag(t^{l_1} - 1, ..., t^{l_m} - 1)."""
    if H.ordering is not Ordering.RPOT:
        raise ValueError("compute_A expects an rPOT basis")
    prof = H.profile
    f = prof.field
    m = prof.m
    h = [v.parts for v in H.vectors]
    A = [[Poly(f) for _ in range(m)] for _ in range(m)]
    for i in range(m):
        q, r = divmod(Poly.cyclic_modulus(f, prof.lengths[i]), h[i][i])
        if r:
            raise InexactDivisionError(i, i)
        A[i][i] = q
        for j in range(i - 1, -1, -1):
            s = Poly(f)
            for d in range(j + 1, i + 1):
                if A[i][d] and h[d][j]:
                    s = s + A[i][d] * h[d][j]
            if not s:
                continue
            q, r = divmod(s, h[j][j])
            if r:
                raise InexactDivisionError(i, j)
            A[i][j] = -q
    out = PolyMatrix(tuple(tuple(r) for r in A), prof)
    if check:
        with suspended():
            for i in range(m):
                for j in range(m):
                    acc = Poly(f)
                    for d in range(m):
                        acc = acc + A[i][d] * h[d][j]
                    want = Poly.cyclic_modulus(f, prof.lengths[i]) if i == j else Poly(f)
                    if acc != want:
                        raise ArithmeticError(f"A * h != diag at ({i + 1}, {j + 1})")
    return out


def _hat_entry(a: Poly, l: int) -> Poly:
    # A diagonal entry of degree l (h_ii = 1) has no reduced hat; keep its
    # formal reciprocal, which equals t^l - 1 up to sign.
    if a.deg == l:
        return a.reciprocal()
    return a.hat(l)


def transpose_hat(A: PolyMatrix) -> PolyMatrix:
    """B with b_ij = hat(a_ji, l_j); upper triangular."""
    prof = A.profile
    f = prof.field
    m = prof.m
    B = [[Poly(f) for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            a = A[j, i]
            if a:
                B[i][j] = _hat_entry(a, prof.lengths[j])
    return PolyMatrix(tuple(tuple(r) for r in B), prof)


def basis_from_B(A: PolyMatrix, B: PolyMatrix) -> GrobnerBasis:
    """POT basis with g_ii = reciprocal(a_ii) and g_ij = t^{deg a_ii} b_ij mod (t^{l_j} - 1)."""
    prof = A.profile
    f = prof.field
    m = prof.m
    vecs = []
    for i in range(m):
        a_ii = A[i, i]
        d = int(a_ii.deg)
        parts = [Poly(f) for _ in range(m)]
        parts[i] = a_ii.reciprocal()
        for j in range(i + 1, m):
            b = B[i, j]
            if b:
                parts[j] = b.shift(d).mod_cyclic(prof.lengths[j])
        vecs.append(PolyVec(tuple(parts), prof))
    return GrobnerBasis(tuple(vecs), Ordering.POT, False, prof)


@dataclass(frozen=True)
class TransposeRun:
    dual_basis: GrobnerBasis
    A: PolyMatrix
    B: PolyMatrix
    unreduced: GrobnerBasis
    basis: GrobnerBasis


def transpose_pipeline(
    H: Sequence[Sequence[int]], profile: OrbitProfile, reduce: bool = True
) -> TransposeRun:
    if any(len(r) != profile.n for r in H):
        raise ValueError(f"parity-check rows must have length {profile.n}")
    rows = [vec_to_polyvec(r, profile) for r in H]
    hb = reduce_basis(buchberger(rows, profile, Ordering.RPOT))
    A = compute_A(hb)
    B = transpose_hat(A)
    G0 = basis_from_B(A, B)
    G = reduce_basis(G0) if reduce else G0
    return TransposeRun(hb, A, B, G0, G)


def algorithm2(
    H: Sequence[Sequence[int]], profile: OrbitProfile, reduce: bool = True
) -> GrobnerBasis:
    """POT Gröbner basis of the code with parity-check matrix H, via the dual's rPOT basis."""
    return transpose_pipeline(H, profile, reduce).basis


def verify_theorem2(hb: GrobnerBasis, B: PolyMatrix) -> bool:
    """<h_i, b_j> equals t^{l_i} - 1 for i == j and 0 otherwise.

    Uses the unreduced pairing: read in M, <h_i, b_i> would collapse to 0.
    """
    prof = hb.profile
    m = prof.m
    with suspended():
        for i in range(m):
            for j in range(m):
                val, _ = scalar_product(hb.vectors[i], B.row(j), exact=True)
                want = Poly.cyclic_modulus(prof.field, prof.lengths[i]) if i == j else Poly(prof.field)
                if val != want:
                    return False
    return True


def generator_matrix(G: GrobnerBasis) -> Matrix:
    """Rows t^k g_i for 0 <= k < l_i - deg g_ii of a reduced POT basis.

    The row count is the code dimension k; the rows generate the code.
    """
    if G.ordering is not Ordering.POT:
        raise ValueError("generator_matrix expects a POT basis")
    prof = G.profile
    rows: Matrix = []
    for i, g in enumerate(G.vectors):
        v = g.reduce()
        for _ in range(prof.lengths[i] - int(g[i].deg)):
            rows.append(polyvec_to_vec(v))
            v = shift_sigma(v)
    return rows

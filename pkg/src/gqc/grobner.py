"""Gröbner bases of submodules of F_q[t]^m containing all X_i = (t^{l_i} - 1) e_i.

Bases are triangular: under POT the i-th vector has zeros before component
``i`` and its leading term in component ``i``; under rPOT the picture is
mirrored (zeros after component ``i``).  Indices are zero-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .core import OrbitProfile, PolyVec, std_xi
from .poly import Poly, sub_mul


class Ordering(enum.Enum):
    POT = "POT"
    RPOT = "rPOT"


class BasisError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    """t^exp e_orbit (zero-based orbit)."""

    orbit: int
    exp: int

    def __str__(self) -> str:
        if self.exp == 0:
            return f"e{self.orbit + 1}"
        t = "t" if self.exp == 1 else f"t^{self.exp}"
        return f"{t} e{self.orbit + 1}"


@dataclass(frozen=True)
class GrobnerBasis:
    vectors: tuple[PolyVec, ...]
    ordering: Ordering
    reduced: bool
    profile: OrbitProfile

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))

    @property
    def m(self) -> int:
        return self.profile.m

    def entry(self, i: int, j: int) -> Poly:
        return self.vectors[i][j]

    def diagonal(self, i: int) -> Poly:
        return self.vectors[i][i]

    def diagonal_degrees(self) -> list[int]:
        return [int(self.diagonal(i).deg) for i in range(self.m)]

    @property
    def dimension(self) -> int:
        """Dimension over F_q of the code whose closure this basis generates."""
        return sum(l - d for l, d in zip(self.profile.lengths, self.diagonal_degrees()))

    def validate(self) -> None:
        """Check triangular shape and diagonal degrees; raise BasisError otherwise."""
        m = self.m
        if len(self.vectors) != m:
            raise BasisError(f"expected {m} basis vectors, got {len(self.vectors)}")
        for i, g in enumerate(self.vectors):
            if g.profile != self.profile:
                raise BasisError(f"g{i + 1} has a different orbit profile")
            zeros = range(i) if self.ordering is Ordering.POT else range(i + 1, m)
            for j in zeros:
                if g[j]:
                    raise BasisError(f"g{i + 1} has a nonzero entry in component {j + 1}")
            d = g[i]
            l = self.profile.lengths[i]
            if not d or d.deg > l:
                raise BasisError(f"diagonal entry of g{i + 1} has invalid degree")
            if self.reduced and d.lead != 1:
                raise BasisError(f"diagonal entry of g{i + 1} is not monic")

    def __str__(self) -> str:
        return "\n".join(f"g{i + 1} = {g}" for i, g in enumerate(self.vectors))


def _mirror(B: GrobnerBasis, ordering: Ordering) -> GrobnerBasis:
    """Reverse component and vector order: a POT basis becomes rPOT and back."""
    prof = B.profile.reversed()
    vecs = tuple(PolyVec(g.parts[::-1], prof) for g in reversed(B.vectors))
    return GrobnerBasis(vecs, ordering, B.reduced, prof)


def _eliminate(r: list[Poly], p: list[Poly], j: int, lengths: Sequence[int]) -> list[Poly]:
    """r - Q p with Q = r_j // p_j; component j is exact, later ones cyclic."""
    quo, rem = divmod(r[j], p[j])
    out = list(r)
    out[j] = rem
    for c in range(j + 1, len(r)):
        out[c] = sub_mul(r[c], quo, p[c], lengths[c])
    return out


def _buchberger_pot(rows: Sequence[PolyVec], profile: OrbitProfile) -> list[PolyVec]:
    lengths = profile.lengths
    m = profile.m
    working = [list(v.reduce().parts) for v in rows]
    working = [r for r in working if any(r)]
    basis: list[PolyVec] = []
    for j in range(m):
        working.append(list(std_xi(j, profile).parts))
        active = [r for r in working if r[j]]
        rest = [r for r in working if not r[j]]
        # Euclidean elimination in column j: the row of least column degree
        # reduces all others until it is the only one left (a gcd step).
        while True:
            k = min(range(len(active)), key=lambda i: active[i][j].deg)
            pivot = active[k]
            nxt = [pivot]
            for i, r in enumerate(active):
                if i == k:
                    continue
                r = _eliminate(r, pivot, j, lengths)
                if r[j]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
            if len(active) == 1:
                break
        basis.append(PolyVec(tuple(active[0]), profile))
        working = rest
    return basis


def buchberger(
    rows: Sequence[PolyVec], profile: OrbitProfile, ordering: Ordering = Ordering.POT
) -> GrobnerBasis:
    """Triangular Gröbner basis of <rows> + <X_1, ..., X_m> (not reduced)."""
    if ordering is Ordering.RPOT:
        rprof = profile.reversed()
        rrows = [PolyVec(r.parts[::-1], rprof) for r in rows]
        pot = GrobnerBasis(tuple(_buchberger_pot(rrows, rprof)), Ordering.POT, False, rprof)
        return _mirror(pot, Ordering.RPOT)
    return GrobnerBasis(tuple(_buchberger_pot(rows, profile)), Ordering.POT, False, profile)


def reduce_basis(B: GrobnerBasis) -> GrobnerBasis:
    """Monic diagonals and deg g_ij < deg g_jj off the diagonal."""
    if B.ordering is Ordering.RPOT:
        return _mirror(reduce_basis(_mirror(B, Ordering.POT)), Ordering.RPOT)
    lengths = B.profile.lengths
    m = B.m
    g = [list(v.parts) for v in B.vectors]
    f = B.profile.field
    for i in range(m):
        lead = g[i][i].lead
        if lead != 1:
            c = f.inv(lead)
            g[i] = [p.scale(c) for p in g[i]]
    for j in range(1, m):
        d = g[j][j].deg
        for i in range(j):
            if g[i][j].deg >= d:
                g[i] = _eliminate(g[i], g[j], j, lengths)
    vecs = tuple(PolyVec(tuple(v), B.profile) for v in g)
    return GrobnerBasis(vecs, B.ordering, True, B.profile)


@dataclass(frozen=True)
class DivisionResult:
    quotients: tuple[Poly, ...]
    remainder: PolyVec


def divide(u: PolyVec, B: GrobnerBasis) -> DivisionResult:
    """Divide u (read in M) by a POT basis; the remainder is the normal form."""
    if B.ordering is not Ordering.POT:
        raise BasisError("division is implemented for POT bases")
    lengths = B.profile.lengths
    f = B.profile.field
    r = list(u.reduce().parts)
    quos = []
    for i, g in enumerate(B.vectors):
        if r[i].deg < g[i].deg:
            quos.append(Poly(f))
            continue
        quo, rem = divmod(r[i], g[i])
        quos.append(quo)
        r[i] = rem
        for c in range(i + 1, B.m):
            r[c] = sub_mul(r[c], quo, g[c], lengths[c])
    return DivisionResult(tuple(quos), PolyVec(tuple(r), B.profile))


def classify_monomials(B: GrobnerBasis) -> tuple[list[Monomial], list[Monomial]]:
    """(redundant, information) monomials.

    t^j e_i is an information monomial iff it is a leading monomial of the
    closure, i.e. j >= deg g_ii; the rest (j < deg g_ii) carry the remainder.
    """
    red: list[Monomial] = []
    info: list[Monomial] = []
    for i, l in enumerate(B.profile.lengths):
        d = int(B.diagonal(i).deg)
        for e in range(l):
            (info if e >= d else red).append(Monomial(i, e))
    return red, info


def in_submodule(u: PolyVec, B: GrobnerBasis) -> bool:
    return divide(u, B).remainder.is_zero()

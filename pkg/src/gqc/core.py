"""Orbit profiles and polynomial vectors of generalized quasi-cyclic codes.

A code of length ``n`` whose coordinates split into ``m`` orbits of lengths
``l_1..l_m`` lives in M = (+)_i F_q[t]/(t^{l_i} - 1).  A codeword maps to
the m-tuple of polynomials ``c_i(t) = sum_j c_{i,j} t^j`` and the local
cyclic shift acts as multiplication by ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .field import GF, suspended
from .linalg import Matrix, rank
from .poly import Poly, mul_mod_cyclic


@dataclass(frozen=True)
class OrbitProfile:
    field: GF
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(int(l) for l in self.lengths))
        if not self.lengths:
            raise ValueError("an orbit profile needs at least one orbit")
        if any(l < 1 for l in self.lengths):
            raise ValueError(f"orbit lengths must be positive: {self.lengths}")

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for l in self.lengths:
            out.append(acc)
            acc += l
        return tuple(out)

    @property
    def lcm(self) -> int:
        return reduce(math.lcm, self.lengths, 1)

    def reversed(self) -> OrbitProfile:
        return OrbitProfile(self.field, self.lengths[::-1])

    def __str__(self) -> str:
        return f"{self.field} orbits {list(self.lengths)}"


@dataclass(frozen=True)
class PolyVec:
    """An m-tuple of polynomials, read in F_q[t]^m or in M."""

    parts: tuple[Poly, ...]
    profile: OrbitProfile

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) != self.profile.m:
            raise ValueError(
                f"expected {self.profile.m} components, got {len(self.parts)}"
            )

    @classmethod
    def zero(cls, profile: OrbitProfile) -> PolyVec:
        return cls(tuple(Poly(profile.field) for _ in profile.lengths), profile)

    @classmethod
    def from_exponents(cls, profile: OrbitProfile, exps: Sequence[Iterable[int]]) -> PolyVec:
        f = profile.field
        return cls(tuple(Poly.from_exponents(f, e) for e in exps), profile)

    def __getitem__(self, i: int) -> Poly:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def is_zero(self) -> bool:
        return not any(self.parts)

    @property
    def is_reduced_in_m(self) -> bool:
        return all(len(p) <= l for p, l in zip(self.parts, self.profile.lengths))

    def reduce(self) -> PolyVec:
        """Canonical representative in M."""
        if self.is_reduced_in_m:
            return self
        return PolyVec(
            tuple(p.mod_cyclic(l) for p, l in zip(self.parts, self.profile.lengths)),
            self.profile,
        )

    def __add__(self, other: PolyVec) -> PolyVec:
        return PolyVec(tuple(a + b for a, b in zip(self.parts, other.parts)), self.profile)

    def __sub__(self, other: PolyVec) -> PolyVec:
        return PolyVec(tuple(a - b for a, b in zip(self.parts, other.parts)), self.profile)

    def __neg__(self) -> PolyVec:
        return PolyVec(tuple(-a for a in self.parts), self.profile)

    def mul(self, p: Poly) -> PolyVec:
        """p(t) * self, reduced in M."""
        return PolyVec(
            tuple(
                mul_mod_cyclic(p, a, l) if a else a
                for a, l in zip(self.parts, self.profile.lengths)
            ),
            self.profile,
        )

    def scale(self, c: int) -> PolyVec:
        return PolyVec(tuple(a.scale(c) for a in self.parts), self.profile)

    def reversed(self) -> PolyVec:
        return PolyVec(self.parts[::-1], self.profile.reversed())

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


def vec_to_polyvec(row: Sequence[int], profile: OrbitProfile) -> PolyVec:
    if len(row) != profile.n:
        raise ValueError(f"row has length {len(row)}, profile needs {profile.n}")
    f = profile.field
    parts = tuple(
        Poly(f, row[o : o + l]) for o, l in zip(profile.offsets, profile.lengths)
    )
    return PolyVec(parts, profile)


def polyvec_to_vec(v: PolyVec) -> list[int]:
    out: list[int] = []
    for i, (p, l) in enumerate(zip(v.parts, v.profile.lengths)):
        if len(p) > l:
            raise ValueError(f"component {i + 1} has degree {p.deg} >= orbit length {l}")
        out.extend(p.coeffs)
        out.extend([0] * (l - len(p)))
    return out


def std_xi(i: int, profile: OrbitProfile) -> PolyVec:
    """X_i = (t^{l_i} - 1) e_i, with ``i`` zero-based."""
    if not 0 <= i < profile.m:
        raise IndexError(f"orbit index {i} out of range for {profile.m} orbits")
    f = profile.field
    parts = [Poly(f) for _ in range(profile.m)]
    parts[i] = Poly.cyclic_modulus(f, profile.lengths[i])
    return PolyVec(tuple(parts), profile)


def unit_vector(i: int, profile: OrbitProfile) -> PolyVec:
    f = profile.field
    parts = [Poly(f) for _ in range(profile.m)]
    parts[i] = Poly.one(f)
    return PolyVec(tuple(parts), profile)


def shift_sigma(v: PolyVec, times: int = 1) -> PolyVec:
    """Simultaneous local cyclic shift, i.e. multiplication by t in M."""
    parts = []
    for p, l in zip(v.parts, v.profile.lengths):
        if len(p) > l:
            raise ValueError("shift_sigma needs a vector reduced in M")
        c = list(p.coeffs) + [0] * (l - len(p))
        k = times % l
        parts.append(Poly(p.field, c[l - k :] + c[: l - k]))
    return PolyVec(tuple(parts), v.profile)


def shift_row(row: Sequence[int], profile: OrbitProfile) -> list[int]:
    out: list[int] = []
    for o, l in zip(profile.offsets, profile.lengths):
        block = list(row[o : o + l])
        out.extend(block[-1:] + block[:-1])
    return out


def _exact_hat(v: Poly, l: int) -> Poly:
    if v.deg == l:
        return v.reciprocal()
    if v.deg > l:
        raise ValueError(f"exact scalar product needs degree <= {l}, got {v.deg}")
    return v.hat(l)


def scalar_product(u: PolyVec, v: PolyVec, exact: bool = False) -> tuple[Poly, int]:
    """The pairing sum_i u_i(t) * hat(v_i)(t) * sum_k t^{k l_i} modulo t^l - 1.

    ``l`` is the lcm of the orbit lengths where both ``u_i`` and ``v_i`` are
    nonzero (``l = 1`` for an empty joint support).  With ``exact=True`` no
    cyclic reduction is applied anywhere: components may carry degree up to
    ``l_i`` (a degree-``l_i`` component is hatted as its reciprocal) and the
    value is the plain polynomial sum_i u_i * hat(v_i) * (t^l - 1)/(t^{l_i} - 1).
    """
    if u.profile != v.profile:
        raise ValueError("scalar product of vectors with different profiles")
    profile = u.profile
    f = profile.field
    if not exact:
        u, v = u.reduce(), v.reduce()
    support = [i for i in range(profile.m) if u[i] and v[i]]
    if not support:
        return Poly(f), 1
    L = reduce(math.lcm, (profile.lengths[i] for i in support), 1)
    if exact:
        total = Poly(f)
        for i in support:
            li = profile.lengths[i]
            rep = Poly(f, ([1] + [0] * (li - 1)) * (L // li))
            total = total + u[i] * _exact_hat(v[i], li) * rep
        return total, L
    acc = [0] * L
    for i in support:
        li = profile.lengths[i]
        w = mul_mod_cyclic(u[i], v[i].hat(li), li)
        for e, c in enumerate(w.coeffs):
            if c:
                for k in range(e, L, li):
                    acc[k] = f.add(acc[k], c) if acc[k] else c
    return Poly(f, acc), L


def matrix_repr(v: PolyVec) -> Matrix:
    """Rows v, t v, ..., t^{l-1} v with l the lcm over nonzero components."""
    v = v.reduce()
    nz = [l for p, l in zip(v.parts, v.profile.lengths) if p]
    l = reduce(math.lcm, nz, 1)
    rows = []
    w = v
    for _ in range(l):
        rows.append(polyvec_to_vec(w))
        w = shift_sigma(w)
    return rows


def circulant(a: Poly, l: int) -> Matrix:
    """l x l circulant whose first row holds the coefficients of a mod t^l - 1."""
    c = list(a.mod_cyclic(l).coeffs)
    c += [0] * (l - len(c))
    return [[c[(j - i) % l] for j in range(l)] for i in range(l)]


def check_gqc(H: Sequence[Sequence[int]], profile: OrbitProfile) -> bool:
    """True iff the row space of H is invariant under the local cyclic shift."""
    if any(len(r) != profile.n for r in H):
        return False
    if not H:
        return True
    f = profile.field
    with suspended():
        r = rank(f, H)
        shifted = [shift_row(row, profile) for row in H]
        return rank(f, list(H) + shifted) == r

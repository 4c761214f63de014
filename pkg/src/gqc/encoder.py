"""Systematic encoding by division with a reduced POT basis.

Message symbols are attached to the information monomials in canonical order
(orbit-major, exponent ascending).  Dividing the resulting vector u by the
basis leaves a remainder supported on redundant monomials only, so
c = u - remainder is a codeword that carries the message verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .core import OrbitProfile, PolyVec, polyvec_to_vec
from .field import GF
from .grobner import GrobnerBasis, Monomial, Ordering, classify_monomials, divide
from .linalg import Matrix
from .poly import Poly


@dataclass(frozen=True)
class CodeSpec:
    profile: OrbitProfile
    basis: GrobnerBasis
    k: int
    information_monomials: tuple[Monomial, ...]
    redundant_monomials: tuple[Monomial, ...] = dc_field(default=(), repr=False)

    @classmethod
    def from_basis(cls, basis: GrobnerBasis) -> CodeSpec:
        if basis.ordering is not Ordering.POT or not basis.reduced:
            raise ValueError("encoding needs a reduced POT basis")
        basis.validate()
        red, info = classify_monomials(basis)
        return cls(basis.profile, basis, len(info), tuple(sorted(info)), tuple(sorted(red)))

    def positions(self) -> list[int]:
        """Codeword coordinates of the information monomials."""
        offs = self.profile.offsets
        return [offs[mono.orbit] + mono.exp for mono in self.information_monomials]


def message_vector(message: Sequence[int], spec: CodeSpec) -> PolyVec:
    if len(message) != spec.k:
        raise ValueError(f"message has {len(message)} symbols, code dimension is {spec.k}")
    prof = spec.profile
    q = prof.field.q
    coeffs = [[0] * l for l in prof.lengths]
    for sym, mono in zip(message, spec.information_monomials):
        if not 0 <= sym < q:
            raise ValueError(f"message symbol {sym} outside GF({q})")
        coeffs[mono.orbit][mono.exp] = sym
    return PolyVec(tuple(Poly(prof.field, c) for c in coeffs), prof)


def encode_with_remainder(message: Sequence[int], spec: CodeSpec) -> tuple[list[int], PolyVec]:
    u = message_vector(message, spec)
    rem = divide(u, spec.basis).remainder
    return polyvec_to_vec(u - rem), rem


def encode(message: Sequence[int], spec: CodeSpec) -> list[int]:
    return encode_with_remainder(message, spec)[0]


def syndrome(c: Sequence[int], H: Matrix, field: GF) -> list[int]:
    out = []
    for row in H:
        if len(row) != len(c):
            raise ValueError(f"codeword length {len(c)} does not match parity checks ({len(row)})")
        acc = 0
        for x, y in zip(row, c):
            if x and y:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out


def verify_codeword(c: Sequence[int], H: Matrix, field: GF) -> bool:
    """True iff H c^T = 0."""
    return not any(syndrome(c, H, field))

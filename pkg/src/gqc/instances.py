"""Seeded random GQC codes for tests, sweeps and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import OrbitProfile, PolyVec, matrix_repr, std_xi
from .field import GF, suspended
from .grobner import GrobnerBasis, Ordering
from .linalg import Matrix, gauss_echelon, matmul
from .poly import Poly, gcd_ext


@dataclass(frozen=True)
class Instance:
    H: Matrix
    profile: OrbitProfile

    @property
    def n(self) -> int:
        return self.profile.n


def random_poly(rng: random.Random, field: GF, deg_bound: int) -> Poly:
    return Poly(field, [rng.randrange(field.q) for _ in range(deg_bound)])


def random_divisor(rng: random.Random, field: GF, l: int) -> Poly:
    """A monic divisor of t^l - 1 (gcd with a random polynomial, or its cofactor)."""
    mod = Poly.cyclic_modulus(field, l)
    r = random_poly(rng, field, l)
    if not r:
        return mod
    g, _ = gcd_ext([mod, r])
    if rng.random() < 0.5:
        g = mod.exact_div(g).monic()
    return g


def random_invertible(rng: random.Random, field: GF, r: int) -> Matrix:
    while True:
        S = [[rng.randrange(field.q) for _ in range(r)] for _ in range(r)]
        if len(gauss_echelon(field, S)[1]) == r:
            return S


def circulant_parity_check(generators: list[PolyVec], profile: OrbitProfile) -> Matrix:
    """Stacked shifts t^k v of each dual generator, keeping only shifts that raise the rank.

    This is the block-circulant shape in which GQC parity checks are usually given.
    """
    f = profile.field
    rows: Matrix = []
    r = 0
    for v in generators:
        for row in matrix_repr(v):
            trial = rows + [row]
            if len(gauss_echelon(f, trial)[1]) > r:
                rows, r = trial, r + 1
    return rows


def parity_check_from_dual(
    rng: random.Random, generators: list[PolyVec], profile: OrbitProfile, scramble: bool = True
) -> Matrix:
    """Full-rank parity-check matrix of the code whose dual is generated by ``generators``.

    With ``scramble`` the rows are random combinations of the echelon form
    (dense, no visible circulant structure); otherwise the block-circulant
    rows of :func:`circulant_parity_check` are returned.
    """
    f = profile.field
    if not scramble:
        return circulant_parity_check(generators, profile)
    rows: Matrix = []
    for v in generators:
        rows.extend(matrix_repr(v))
    E, _ = gauss_echelon(f, rows) if rows else ([], [])
    if not E:
        return E
    return matmul(f, random_invertible(rng, f, len(E)), E)


def random_gqc(
    rng: random.Random,
    field: GF,
    lengths: tuple[int, ...],
    generators: int | None = None,
    scramble: bool = True,
) -> Instance:
    """A random GQC code, given by a scrambled full-rank parity-check matrix."""
    profile = OrbitProfile(field, lengths)
    with suspended():
        while True:
            count = generators if generators is not None else rng.randint(1, 3)
            gens = []
            for _ in range(count):
                parts = []
                for l in lengths:
                    if rng.random() < 0.15:
                        parts.append(Poly(field))
                        continue
                    d = random_divisor(rng, field, l)
                    parts.append((random_poly(rng, field, l) * d).mod_cyclic(l))
                gens.append(PolyVec(tuple(parts), profile))
            H = parity_check_from_dual(rng, gens, profile, scramble)
            if H:
                return Instance(H, profile)


def random_lengths(rng: random.Random, n_max: int, m_max: int = 4, l_max: int = 12) -> tuple[int, ...]:
    m = rng.randint(1, m_max)
    lengths = []
    budget = n_max
    for i in range(m):
        hi = min(l_max, budget - (m - i - 1))
        if hi < 1:
            break
        l = rng.randint(1, hi)
        lengths.append(l)
        budget -= l
    return tuple(lengths)


def partition_lengths(rng: random.Random, n: int, m_max: int = 4) -> tuple[int, ...]:
    """Random orbit lengths summing to exactly n."""
    m = rng.randint(1, min(m_max, n))
    cuts = sorted(rng.sample(range(1, n), m - 1))
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def high_rate_gqc(
    rng: random.Random, field: GF, n_target: int, scramble: bool = False
) -> Instance:
    """Random code with m <= n/4 and rate >= 0.8 (characteristic 2).

    Orbit lengths are 8 or 16, so t^l - 1 = (t + 1)^l; dual components are
    multiples of (t + 1)^{l - d} for d <= 4, which keeps the dual small.
    """
    if field.p != 2:
        raise ValueError("high-rate instances are generated over fields of characteristic 2")
    with suspended():
        while True:
            lengths = []
            budget = n_target
            while budget >= 8:
                l = rng.choice([8, 8, 16]) if budget >= 16 else 8
                lengths.append(l)
                budget -= l
            profile = OrbitProfile(field, tuple(lengths))
            n = profile.n
            gens = []
            for _ in range(rng.randint(1, 3)):
                parts = []
                for l in lengths:
                    d = rng.randint(0, 4)
                    if d == 0:
                        parts.append(Poly(field))
                        continue
                    base = Poly.from_exponents(field, [0, 1])  # t + 1; (t+1)^l = t^l - 1
                    cof = Poly.one(field)
                    for _ in range(l - d):
                        cof = cof * base
                    parts.append((random_poly(rng, field, d) * cof).mod_cyclic(l))
                gens.append(PolyVec(tuple(parts), profile))
            H = parity_check_from_dual(rng, gens, profile, scramble)
            if H and len(H) <= 0.2 * n and profile.m <= n / 4:
                return Instance(H, profile)


@dataclass(frozen=True)
class FGInstance:
    basis: GrobnerBasis

    @property
    def profile(self) -> OrbitProfile:
        return self.basis.profile


def random_fg_basis(rng: random.Random, field: GF, n_max: int = 64) -> FGInstance:
    """A reduced POT basis with g_ii = 1 for i < m and l_1 <= l_2 = ... = l_m."""
    with suspended():
        while True:
            m = rng.randint(1, 4)
            L = rng.randint(2, max(2, min(24, n_max // m)))
            l1 = rng.randint(1, L) if m > 1 else L
            lengths = (l1,) + (L,) * (m - 1)
            if sum(lengths) > n_max:
                continue
            profile = OrbitProfile(field, lengths)
            g_mm = random_divisor(rng, field, L)
            if g_mm.deg >= L:
                continue
            d = int(g_mm.deg)
            vecs = []
            for i in range(m - 1):
                parts = [Poly(field) for _ in range(m)]
                parts[i] = Poly.one(field)
                if d > 0:
                    tail = random_poly(rng, field, d)
                    if lengths[i] != L:
                        g, _ = gcd_ext([g_mm, Poly.cyclic_modulus(field, lengths[i])])
                        tail = (tail * g_mm.exact_div(g)) % g_mm
                    parts[m - 1] = tail
                vecs.append(PolyVec(tuple(parts), profile))
            last = [Poly(field) for _ in range(m)]
            last[m - 1] = g_mm
            vecs.append(PolyVec(tuple(last), profile))
            return FGInstance(GrobnerBasis(tuple(vecs), Ordering.POT, True, profile))


def trivial_basis(profile: OrbitProfile) -> GrobnerBasis:
    return GrobnerBasis(
        tuple(std_xi(i, profile) for i in range(profile.m)), Ordering.POT, True, profile
    )

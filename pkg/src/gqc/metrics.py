"""Operation-count estimates, measured counts, encoder circuit bounds and a
behavioral serial encoder for bases with unit diagonals before the last orbit.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import OrbitProfile
from .field import OpCounter, counting
from .encoder import CodeSpec, message_vector
from .grobner import GrobnerBasis, Ordering
from .linalg import Matrix
from .poly import Poly


@dataclass(frozen=True)
class ComplexityEstimate:
    n: int
    k: int
    m: int
    echelon: int
    transpose: int

    def for_algorithm(self, algorithm: str | int) -> int:
        return self.echelon if _algo_name(algorithm) == "echelon" else self.transpose


def _algo_name(algorithm: str | int) -> str:
    if algorithm in (1, "1", "echelon"):
        return "echelon"
    if algorithm in (2, "2", "transpose"):
        return "transpose"
    raise ValueError(f"unknown algorithm {algorithm!r}")


def estimate_complexity(n: int, k: int, m: int) -> ComplexityEstimate:
    if not (0 <= k <= n and 1 <= m <= n):
        raise ValueError(f"invalid parameters n={n}, k={k}, m={m}")
    r = n - k
    echelon = r**3 / 3 + k * r**2 + n * k**2
    transpose = n * r**2 + m * n * k + m * k * r
    return ComplexityEstimate(n, k, m, round(echelon), round(transpose))


def n3_coefficients(rate: float, orbit_ratio: float) -> tuple[float, float]:
    """Leading n^3 coefficients with k = rate * n and m = orbit_ratio * n."""
    r = 1 - rate
    echelon = r**3 / 3 + rate * r**2 + rate**2
    transpose = r**2 + orbit_ratio * rate + orbit_ratio * rate * r
    return echelon, transpose


def n3_coefficient_csv(
    rates: Iterable[float], orbit_ratios: Sequence[float] = (1 / 4, 1 / 8, 1 / 16)
) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rate", "echelon"] + [f"transpose_m={x:g}n" for x in orbit_ratios])
    for rate in rates:
        ech = n3_coefficients(rate, 0)[0]
        w.writerow([f"{rate:g}", f"{ech:.6f}"] + [f"{n3_coefficients(rate, x)[1]:.6f}" for x in orbit_ratios])
    return buf.getvalue()


def measure_ops(H: Matrix, profile: OrbitProfile, algorithm: str | int) -> OpCounter:
    """Run one of the two basis algorithms with field-operation counting on."""
    from .echelon import algorithm1
    from .transpose import algorithm2

    run = algorithm1 if _algo_name(algorithm) == "echelon" else algorithm2
    with counting() as ops:
        run(H, profile)
    return ops


@dataclass(frozen=True)
class CircuitReport:
    n: int
    k: int
    m: int
    adder_inner: int
    adder_mid: int
    adder_mid_column: int
    adder_outer: int
    memory_inner: int
    memory_outer: int
    k_i: tuple[int, ...]
    delta: tuple[int, ...]
    fg_shape: bool

    @property
    def adder_bound(self) -> int:
        return self.adder_inner

    @property
    def memory_bound(self) -> int:
        return self.memory_inner

    def dominates(self, adders: int, memory: int) -> bool:
        return self.adder_outer >= adders and self.memory_outer >= memory


def is_fg_shape(B: GrobnerBasis) -> bool:
    m = B.m
    return all(B.diagonal(i) == Poly.one(B.profile.field) for i in range(m - 1))


def circuit_bounds(B: GrobnerBasis) -> CircuitReport:
    """Adder and memory bound chains of the serial systematic encoder."""
    if B.ordering is not Ordering.POT:
        raise ValueError("circuit bounds need a POT basis")
    prof = B.profile
    m, n = prof.m, prof.n
    degs = []
    for i in range(m):
        d = B.diagonal(i)
        if not d:
            raise ValueError(f"zero diagonal entry in g{i + 1}")
        degs.append(int(d.deg))
    r = sum(degs)
    k = n - r
    off = [(int(B.entry(i, j).deg)) for i in range(m) for j in range(i + 1, m) if B.entry(i, j)]
    adder_inner = r + sum(d + 1 for d in off)
    # The middle term as usually quoted weights g_ii by (m - i); bounding each
    # deg g_ij + 1 by deg g_jj instead gives the column-weighted variant,
    # which is the one that actually sits between the inner and outer terms.
    adder_mid = r + sum((m - 1 - i) * degs[i] for i in range(m))
    adder_mid_column = r + sum(j * degs[j] for j in range(m))
    k_i = tuple(l - d for l, d in zip(prof.lengths, degs))
    delta = []
    for i in range(m):
        cands = [k_i[j] - 2 for j in range(i)] + [k_i[i] - 1]
        delta.append(max(cands))
    memory_inner = r + sum(off) + sum(delta[i] + 1 for i in range(m - 1))
    return CircuitReport(
        n=n,
        k=k,
        m=m,
        adder_inner=adder_inner,
        adder_mid=adder_mid,
        adder_mid_column=adder_mid_column,
        adder_outer=m * r,
        memory_inner=memory_inner,
        memory_outer=m * r + k,
        k_i=k_i,
        delta=tuple(delta),
        fg_shape=is_fg_shape(B),
    )


@dataclass(frozen=True)
class SerialRun:
    parity: list[int]
    codeword: list[int]
    cycles: int


class FGSerialEncoder:
    """Cycle-level model of the serial-in serial-out encoder.

    A single register bank of size deg g_mm divides by g_mm.  Symbols of
    orbits 1..m-1 enter highest exponent first; each cycle shifts the
    register (multiplication by t modulo g_mm) and injects the symbol through
    the tap network of -g_im.  The last orbit is then clocked through all
    l_m positions (zeros in the parity slots) with plain feedback.  Because
    t^{l_i} = 1 modulo g_mm for the middle orbits, the earlier orbits'
    contributions are unchanged by the later cycles and the final register
    contents are the parity polynomial.
    """

    def __init__(self, spec: CodeSpec):
        B = spec.basis
        if not is_fg_shape(B):
            raise ValueError("serial encoder needs g_ii = 1 for every orbit but the last")
        prof = spec.profile
        f = prof.field
        m = prof.m
        for i in range(m - 1):
            for j in range(i + 1, m - 1):
                if B.entry(i, j):
                    raise ValueError(f"g{i + 1} has a nonzero entry in orbit {j + 1}")
        self.spec = spec
        self.g = B.diagonal(m - 1)
        self.d = int(self.g.deg)
        one_mod = Poly.one(f)
        for i in range(1, m - 1):
            if self.d and Poly.monomial(f, prof.lengths[i]) % self.g != one_mod:
                raise ValueError(f"t^{prof.lengths[i]} is not 1 modulo g_mm (orbit {i + 1})")
        self.taps = [(-B.entry(i, m - 1)).coeffs for i in range(m - 1)]

    def _clock(self, state: list[int], inject: Sequence[int]) -> list[int]:
        f = self.spec.profile.field
        d = self.d
        if d == 0:
            return state
        top = state[-1]
        new = [0] + state[:-1]
        if top:
            for i in range(d):
                if self.g[i]:
                    new[i] = f.sub(new[i], f.mul(top, self.g[i]))
        for i, c in enumerate(inject):
            if c:
                new[i] = f.add(new[i], c)
        return new

    def run(self, message: Sequence[int]) -> SerialRun:
        spec = self.spec
        prof = spec.profile
        f = prof.field
        m = prof.m
        u = message_vector(message, spec)
        state = [0] * self.d
        cycles = 0
        for i in range(m - 1):
            taps = self.taps[i]
            for j in range(prof.lengths[i] - 1, -1, -1):
                c = u[i][j]
                inject = [f.mul(c, x) if c and x else 0 for x in taps]
                state = self._clock(state, inject)
                cycles += 1
        last = u[m - 1]
        for j in range(prof.lengths[m - 1] - 1, -1, -1):
            c = last[j]
            inject = [c] if (c and self.d) else []
            state = self._clock(state, inject)
            cycles += 1
        parity = list(state)
        codeword: list[int] = []
        for i in range(m):
            block = list(u[i].coeffs) + [0] * (prof.lengths[i] - len(u[i]))
            if i == m - 1:
                for j, p in enumerate(parity):
                    if p:
                        block[j] = f.sub(block[j], p)
            codeword.extend(block)
        return SerialRun(parity, codeword, cycles)


def simulate_fg_encoder(spec: CodeSpec, message: Sequence[int]) -> list[int]:
    return FGSerialEncoder(spec).run(message).codeword


# Hardware figures for 3-dimensional type-II EG (first three) and PG codes:
# (s, n, k, n - k, m, adders, memory elements).
HARDWARE_TABLE = (
    (1, 21, 15, 6, 3, 12, 26),
    (2, 315, 265, 50, 5, 76, 328),
    (3, 4599, 4227, 372, 9, 1681, 5769),
    (1, 35, 24, 11, 3, 16, 36),
    (2, 357, 296, 61, 5, 138, 438),
    (3, 4745, 4344, 401, 9, 1846, 6396),
)

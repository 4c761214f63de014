"""Finite fields GF(p^s) with optional operation counting.

Elements are plain integers in ``[0, q)``.  An element of an extension
field encodes ``sum(d_i * alpha**i)`` by its base-``p`` digits ``d_i``.

Operation counting is opt-in and scoped::

    with counting() as ops:
        field.mul(a, b)
    ops.muls  # -> 1
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, fields
from typing import Iterator, Sequence

MAX_ORDER = 1 << 16

# Low-weight primitive polynomials over GF(2), listed as exponents.
DEFAULT_BINARY_MODULI = {
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    5: (5, 2, 0),
    6: (6, 1, 0),
    7: (7, 1, 0),
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 3, 0),
    11: (11, 2, 0),
    12: (12, 6, 4, 1, 0),
    13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0),
    15: (15, 1, 0),
    16: (16, 12, 3, 1, 0),
}


class FieldError(ValueError):
    pass


@dataclass
class OpCounter:
    """Tally of field operations performed inside a :func:`counting` scope."""

    adds: int = 0
    subs: int = 0
    muls: int = 0
    divs: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.subs + self.muls + self.divs

    def as_dict(self) -> dict[str, int]:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total"] = self.total
        return d


_active: contextvars.ContextVar[OpCounter | None] = contextvars.ContextVar(
    "gqc_op_counter", default=None
)


@contextmanager
def counting(counter: OpCounter | None = None) -> Iterator[OpCounter]:
    """Count every field operation issued in this context."""
    counter = OpCounter() if counter is None else counter
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


@contextmanager
def suspended() -> Iterator[None]:
    """Temporarily stop counting (used for internal self-checks)."""
    token = _active.set(None)
    try:
        yield
    finally:
        _active.reset(token)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Dense coefficient-list helpers over the prime field GF(p), used only while
# constructing tables and checking irreducibility.

def _zp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _zp_trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _zp_trim(a)
    return a


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for code in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility test: no monic factor of degree <= s/2."""
    s = len(modulus) - 1
    if s < 1:
        return False
    for d in range(1, s // 2 + 1):
        for f in _monic_polys(p, d):
            if not _zp_rem(modulus, f, p):
                return False
    return True


class GF:
    """The finite field GF(p^s).

    ``modulus`` is the ascending coefficient list of a monic irreducible
    polynomial of degree ``s`` over GF(p).  It may be omitted for prime
    fields and for GF(2^s) with ``s <= 16``.
    """

    def __init__(self, p: int, s: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if s < 1:
            raise FieldError(f"extension degree must be >= 1, got {s}")
        if p**s > MAX_ORDER:
            raise FieldError(f"field order {p}^{s} exceeds 2^16")
        self.p = p
        self.s = s
        self.q = p**s
        if s == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            if modulus is None:
                if p != 2:
                    raise FieldError(f"GF({p}^{s}) requires an explicit modulus")
                exps = DEFAULT_BINARY_MODULI[s]
                modulus = [1 if i in exps else 0 for i in range(s + 1)]
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != s + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {s}")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = tuple(modulus)
        self._binary = p == 2 and s > 1
        self._exp: list[int] = []
        self._log: list[int] = []
        self._add_table: list[list[int]] | None = None
        if s > 1:
            self._build_tables()

    # -- construction -----------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, d: Sequence[int]) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def _slow_mul(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _zp_rem(prod, list(self.modulus), p)
        return self._undigits(rem + [0] * (s - len(rem)))

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = _prime_factors(order)

        def power(g: int, e: int) -> int:
            r, base = 1, g
            while e:
                if e & 1:
                    r = self._slow_mul(r, base)
                base = self._slow_mul(base, base)
                e >>= 1
            return r

        for g in range(2, q):
            if all(power(g, order // f) != 1 for f in factors):
                break
        else:  # pragma: no cover - every finite field has a generator
            raise FieldError("no primitive element found")

        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[order:] = exp[:order]
        self._exp, self._log = exp, log
        if not self._binary and q <= 256:
            self._add_table = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]

    def _digit_add(self, a: int, b: int, sign: int = 1) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + sign * (b % p)) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        c = _active.get()
        if c is not None:
            c.adds += 1
        return self._add(a, b)

    def _add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self._binary:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def sub(self, a: int, b: int) -> int:
        c = _active.get()
        if c is not None:
            c.subs += 1
        if self.s == 1:
            return (a - b) % self.p
        if self._binary:
            return a ^ b
        return self._digit_add(a, b, -1)

    def neg(self, a: int) -> int:
        c = _active.get()
        if c is not None:
            c.subs += 1
        if self.s == 1:
            return -a % self.p
        if self._binary:
            return a
        return self._digit_add(0, a, -1)

    def mul(self, a: int, b: int) -> int:
        c = _active.get()
        if c is not None:
            c.muls += 1
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        c = _active.get()
        if c is not None:
            c.divs += 1
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        c = _active.get()
        if c is not None:
            c.divs += 1
        if b == 0:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if a == 0:
            return 0
        if self.s == 1:
            return a * pow(b, self.p - 2, self.p) % self.p
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    # -- misc -------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def contains(self, a: int) -> bool:
        return 0 <= a < self.q

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF)
            and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s}, modulus={list(self.modulus)})"


def field_new(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> GF:
    return GF(p, s, modulus)


def field_from_order(q: int, modulus: Sequence[int] | None = None) -> GF:
    """Build GF(q) from its order; extension fields need ``modulus`` unless q = 2^s."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1 or q < 2:
        raise FieldError(f"{q} is not a prime power")
    return GF(p, s, modulus)

"""Dense univariate polynomials over GF(q).

Coefficients are stored in ascending order with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree ``NEG_INF``.
Every coefficient operation goes through the field, which keeps the
operation counters honest.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .field import GF

NEG_INF = float("-inf")

Degree = Union[int, float]


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(c)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field: GF) -> Poly:
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> Poly:
        return cls(field, (1,))

    @classmethod
    def const(cls, field: GF, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: GF, exp: int, c: int = 1) -> Poly:
        return cls(field, [0] * exp + [c])

    @classmethod
    def from_exponents(cls, field: GF, exps: Iterable[int]) -> Poly:
        """Sum of ``t**e``; handy for binary fixtures such as 1 + t + t^3."""
        exps = list(exps)
        c = [0] * (max(exps) + 1 if exps else 0)
        for e in exps:
            c[e] = field._add(c[e], 1)
        return cls(field, c)

    @classmethod
    def cyclic_modulus(cls, field: GF, l: int) -> Poly:
        """t^l - 1."""
        # -1 has base-p digits (p-1, 0, ..., 0) in every GF(p^s).
        return cls(field, [field.p - 1] + [0] * (l - 1) + [1])

    # -- basic properties -------------------------------------------------

    @property
    def deg(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def to_text(self) -> str:
        return "[" + " ".join(str(c) for c in self.coeffs) + "]"

    # -- ring operations --------------------------------------------------

    def _check(self, other: Poly) -> None:
        if other.field is not self.field and other.field != self.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            if y:
                out[i] = f.add(out[i], y) if out[i] else y
        return Poly(f, out)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.field
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, y in enumerate(other.coeffs):
            if y:
                out[i] = f.sub(out[i], y)
        return Poly(f, out)

    def __neg__(self) -> Poly:
        f = self.field
        return Poly(f, [f.neg(c) if c else 0 for c in self.coeffs])

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return Poly(self.field, _mul(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        f = self.field
        if c == 0:
            return Poly(f)
        if c == 1:
            return self
        return Poly(f, [f.mul(c, x) if x else 0 for x in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by t^k."""
        if not self.coeffs or k == 0:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def monic(self) -> Poly:
        if not self.coeffs or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly(f), self
        inv_lead = 1 if b[-1] == 1 else f.inv(b[-1])
        quo = [0] * (len(a) - db)
        for top in range(len(a) - 1, db - 1, -1):
            c = a[top]
            if c == 0:
                continue
            if inv_lead != 1:
                c = f.mul(c, inv_lead)
            shift = top - db
            quo[shift] = c
            a[top] = 0
            for i in range(db):
                if b[i]:
                    a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]))
        return Poly(f, quo), Poly(f, a[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- cyclic structure ---------------------------------------------------

    def mod_cyclic(self, l: int) -> Poly:
        """Reduce modulo t^l - 1 by folding exponent e onto e mod l."""
        if l < 1:
            raise ValueError(f"cyclic length must be positive, got {l}")
        if len(self.coeffs) <= l:
            return self
        f = self.field
        out = list(self.coeffs[:l])
        for e in range(l, len(self.coeffs)):
            c = self.coeffs[e]
            if c:
                k = e % l
                out[k] = f.add(out[k], c) if out[k] else c
        return Poly(f, out)

    def hat(self, l: int) -> Poly:
        """Polynomial of the transposed l x l circulant: a0 + a_{l-1} t + ... + a1 t^{l-1}."""
        if l < 1:
            raise ValueError(f"cyclic length must be positive, got {l}")
        a = self.mod_cyclic(l).coeffs
        if not a:
            return Poly(self.field)
        out = [0] * l
        out[0] = a[0]
        for k in range(1, len(a)):
            out[l - k] = a[k]
        return Poly(self.field, out)

    def reciprocal(self) -> Poly:
        """t^deg(a) * a(1/t)."""
        return Poly(self.field, reversed(self.coeffs))


def _mul(f: GF, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out: list[int | None] = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            prod = f.mul(x, y)
            k = i + j
            cur = out[k]
            out[k] = prod if cur is None else f.add(cur, prod)
    return [0 if c is None else c for c in out]


def mul_mod_cyclic(a: Poly, b: Poly, l: int) -> Poly:
    """a * b mod (t^l - 1), folding while accumulating."""
    f = a.field
    out: list[int | None] = [None] * l
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            prod = f.mul(x, y)
            k = (i + j) % l
            cur = out[k]
            out[k] = prod if cur is None else f.add(cur, prod)
    return Poly(f, [0 if c is None else c for c in out])


def sub_mul(acc: Poly, r: Poly, b: Poly, l: int | None = None) -> Poly:
    """acc - r * b, folded modulo t^l - 1 when ``l`` is given."""
    f = acc.field
    if not r.coeffs or not b.coeffs:
        return acc if l is None else acc.mod_cyclic(l)
    size = len(r.coeffs) + len(b.coeffs) - 1
    if l is not None:
        size = min(size, l)
    out = list(acc.coeffs)
    if l is not None and len(out) > l:
        out = list(acc.mod_cyclic(l).coeffs)
    out += [0] * max(0, size - len(out))
    for i, x in enumerate(r.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            k = i + j if l is None else (i + j) % l
            out[k] = f.sub(out[k], f.mul(x, y))
    return Poly(f, out)


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic g = gcd(a, b) with s*a + t*b = g.  Not both zero."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly(f)
    t0, t1 = Poly(f), Poly.one(f)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        raise ValueError("gcd of zero polynomials")
    if r0.lead != 1:
        c = f.inv(r0.lead)
        r0, s0, t0 = r0.scale(c), s0.scale(c), t0.scale(c)
    return r0, s0, t0


def gcd_ext(polys: Sequence[Poly]) -> tuple[Poly, list[Poly]]:
    """Monic gcd of a sequence with Bezout cofactors: sum(c_i * p_i) == g."""
    if not polys:
        raise ValueError("gcd of an empty sequence")
    f = polys[0].field
    cofs = [Poly(f) for _ in polys]
    g: Poly | None = None
    for i, a in enumerate(polys):
        if not a:
            continue
        if g is None:
            c = 1 if a.lead == 1 else f.inv(a.lead)
            g = a.scale(c)
            cofs[i] = Poly.const(f, c)
            continue
        if g.deg == 0:
            break
        g, s, t = xgcd(g, a)
        cofs = [s * c if c else c for c in cofs]
        cofs[i] = t
    if g is None:
        raise ValueError("gcd of all-zero polynomials")
    return g, cofs

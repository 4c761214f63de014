"""Text formats for parity-check matrices and Gröbner bases.

Matrix file::

    gqc-matrix v1
    q: 2                      # or  q: 2^2 modulus: 1 1 1
    orbits: 6 6 3
    rows: 6
    row: 1 1 0 1 1 0 1 0 1 1 0 0 1 1 0
    ...

Basis file::

    gqc-basis v1
    q: 2
    orbits: 3 3 1
    ordering: POT
    reduced: true
    g 1: [1] [1 1] [1]
    ...

Blank lines and ``#`` comments are ignored.  Field elements are integers
in [0, q) (base-p digit encoding for extension fields); coefficient lists
are ascending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import OrbitProfile, PolyVec
from .field import GF, FieldError, field_from_order
from .grobner import GrobnerBasis, Ordering
from .linalg import Matrix
from .poly import Poly

MATRIX_MAGIC = "gqc-matrix v1"
BASIS_MAGIC = "gqc-basis v1"
MESSAGE_ORDER_NOTE = "# message symbols map to information monomials t^j e_i, orbit-major, j ascending"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if s:
            out.append((no, s))
    return out


def _split_key(line: str, no: int) -> tuple[str, str]:
    if ":" not in line:
        raise FormatError(f"expected 'key: value', got {line!r}", no)
    key, value = line.split(":", 1)
    return key.strip(), value.strip()


def _ints(text: str, no: int, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise FormatError(f"non-integer in {what}: {text!r}", no) from None


def _parse_field(value: str, no: int) -> GF:
    m = re.fullmatch(r"(\d+)(?:\s*\^\s*(\d+))?(?:\s+modulus:\s*(.*))?", value)
    if not m:
        raise FormatError(f"bad field specification {value!r}", no)
    base, exp, modulus = m.groups()
    modulus_list = _ints(modulus, no, "modulus") if modulus else None
    try:
        if exp is None:
            return field_from_order(int(base), modulus_list)
        return GF(int(base), int(exp), modulus_list)
    except (FieldError, KeyError) as e:
        raise FormatError(f"bad field q={value!r}: {e}", no) from None


def _format_field(f: GF) -> str:
    if f.s == 1:
        return str(f.p)
    return f"{f.p}^{f.s} modulus: " + " ".join(str(c) for c in f.modulus)


def _header(lines: list[tuple[int, str]], magic: str, keys: tuple[str, ...]) -> tuple[dict, dict, int]:
    if not lines or lines[0][1] != magic:
        no = lines[0][0] if lines else 1
        raise FormatError(f"expected header line {magic!r}", no)
    values: dict[str, str] = {}
    where: dict[str, int] = {}
    idx = 1
    while idx < len(lines) and len(values) < len(keys):
        no, line = lines[idx]
        key, value = _split_key(line, no)
        if key not in keys:
            break
        if key in values:
            raise FormatError(f"duplicate header key {key!r}", no)
        values[key] = value
        where[key] = no
        idx += 1
    for key in keys:
        if key not in values:
            no = lines[idx][0] if idx < len(lines) else lines[-1][0]
            raise FormatError(f"missing header key {key!r}", no)
    return values, where, idx


def _parse_profile(values: dict, where: dict) -> OrbitProfile:
    f = _parse_field(values["q"], where["q"])
    lengths = _ints(values["orbits"], where["orbits"], "orbits")
    try:
        return OrbitProfile(f, tuple(lengths))
    except ValueError as e:
        raise FormatError(str(e), where["orbits"]) from None


def parse_matrix(text: str) -> tuple[Matrix, OrbitProfile]:
    lines = _lines(text)
    values, where, idx = _header(lines, MATRIX_MAGIC, ("q", "orbits", "rows"))
    profile = _parse_profile(values, where)
    counts = _ints(values["rows"], where["rows"], "rows")
    if len(counts) != 1 or counts[0] < 0:
        raise FormatError("rows must be a non-negative integer", where["rows"])
    q, n = profile.field.q, profile.n
    H: Matrix = []
    for no, line in lines[idx:]:
        key, value = _split_key(line, no)
        if key != "row":
            raise FormatError(f"expected 'row:', got {key!r}", no)
        row = _ints(value, no, "row")
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, orbits need {n}", no)
        for x in row:
            if not 0 <= x < q:
                raise FormatError(f"entry {x} is not an element of GF({q})", no)
        H.append(row)
    if len(H) != counts[0]:
        no = lines[-1][0]
        raise FormatError(f"header announces {counts[0]} rows, found {len(H)}", no)
    return H, profile


def write_matrix(H: Matrix, profile: OrbitProfile) -> str:
    out = [
        MATRIX_MAGIC,
        f"q: {_format_field(profile.field)}",
        "orbits: " + " ".join(str(l) for l in profile.lengths),
        f"rows: {len(H)}",
    ]
    out += ["row: " + " ".join(str(x) for x in row) for row in H]
    return "\n".join(out) + "\n"


_POLY_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_basis(text: str) -> GrobnerBasis:
    lines = _lines(text)
    values, where, idx = _header(lines, BASIS_MAGIC, ("q", "orbits", "ordering", "reduced"))
    profile = _parse_profile(values, where)
    f = profile.field
    try:
        ordering = Ordering(values["ordering"])
    except ValueError:
        raise FormatError(f"ordering must be POT or rPOT, got {values['ordering']!r}", where["ordering"]) from None
    if values["reduced"] not in ("true", "false"):
        raise FormatError("reduced must be true or false", where["reduced"])
    vecs: list[PolyVec | None] = [None] * profile.m
    for no, line in lines[idx:]:
        key, value = _split_key(line, no)
        m = re.fullmatch(r"g\s*(\d+)", key)
        if not m:
            raise FormatError(f"expected 'g <i>:', got {key!r}", no)
        i = int(m.group(1)) - 1
        if not 0 <= i < profile.m:
            raise FormatError(f"basis index {i + 1} out of range", no)
        if vecs[i] is not None:
            raise FormatError(f"duplicate basis vector g {i + 1}", no)
        polys = _POLY_RE.findall(value)
        if len(polys) != profile.m or _POLY_RE.sub("", value).strip():
            raise FormatError(f"expected {profile.m} bracketed coefficient lists", no)
        parts = []
        for body in polys:
            coeffs = _ints(body, no, "coefficients")
            for c in coeffs:
                if not 0 <= c < f.q:
                    raise FormatError(f"coefficient {c} is not an element of GF({f.q})", no)
            parts.append(Poly(f, coeffs))
        vecs[i] = PolyVec(tuple(parts), profile)
    missing = [str(i + 1) for i, v in enumerate(vecs) if v is None]
    if missing:
        raise FormatError(f"missing basis vectors: g {', '.join(missing)}", lines[-1][0])
    return GrobnerBasis(tuple(vecs), ordering, values["reduced"] == "true", profile)


def write_basis(B: GrobnerBasis) -> str:
    prof = B.profile
    out = [
        BASIS_MAGIC,
        f"q: {_format_field(prof.field)}",
        "orbits: " + " ".join(str(l) for l in prof.lengths),
        f"ordering: {B.ordering.value}",
        f"reduced: {'true' if B.reduced else 'false'}",
        MESSAGE_ORDER_NOTE,
    ]
    for i, g in enumerate(B.vectors):
        out.append(f"g {i + 1}: " + " ".join(p.to_text() for p in g.parts))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class MatrixFile:
    H: Matrix
    profile: OrbitProfile

    @classmethod
    def read(cls, path: str) -> MatrixFile:
        with open(path, encoding="utf-8") as fh:
            return cls(*parse_matrix(fh.read()))

"""Command-line interface: ``gqc <command> ...``.

Exit status: 0 success, 1 validation failure, 2 I/O or parse error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from typing import Sequence

from .core import check_gqc, scalar_product, vec_to_polyvec
from .echelon import algorithm1
from .encoder import CodeSpec, encode
from .field import GF
from .formats import FormatError, parse_basis, parse_matrix, write_basis
from .grobner import BasisError, Ordering, buchberger, reduce_basis
from .instances import partition_lengths, random_gqc
from .linalg import is_zero, mul_transpose, rank
from .metrics import (
    FGSerialEncoder,
    circuit_bounds,
    estimate_complexity,
    measure_ops,
    n3_coefficient_csv,
)
from .transpose import InexactDivisionError, algorithm2, generator_matrix

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_INTERNAL = 3


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_IO) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise CliError(f"cannot write {path}: {e.strerror}", EXIT_IO) from None


def _load_matrix(path: str):
    try:
        return parse_matrix(_read(path))
    except FormatError as e:
        raise CliError(f"{path}: {e}", EXIT_IO) from None


def _load_basis(path: str):
    try:
        return parse_basis(_read(path))
    except FormatError as e:
        raise CliError(f"{path}: {e}", EXIT_IO) from None


def _parse_message(text: str, q: int) -> list[int]:
    try:
        msg = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"message must be integers: {text!r}", EXIT_IO) from None
    bad = [x for x in msg if not 0 <= x < q]
    if bad:
        raise CliError(f"message symbol {bad[0]} is not in GF({q})", EXIT_INVALID)
    return msg


def cmd_basis(args: argparse.Namespace) -> int:
    H, profile = _load_matrix(args.input)
    if not check_gqc(H, profile):
        raise CliError("the row space of the matrix is not invariant under the orbit shift", EXIT_INVALID)
    run = algorithm1 if args.algorithm == "echelon" else algorithm2
    B = run(H, profile, reduce=not args.no_reduce)
    _write(args.output, write_basis(B))
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    B = _load_basis(args.basis)
    try:
        spec = CodeSpec.from_basis(B)
    except (ValueError, BasisError) as e:
        raise CliError(str(e), EXIT_INVALID) from None
    text = args.message if args.message is not None else _read(args.message_file)
    msg = _parse_message(text, B.profile.field.q)
    if len(msg) != spec.k:
        raise CliError(f"message has {len(msg)} symbols, code dimension is {spec.k}", EXIT_INVALID)
    c = encode(msg, spec)
    _write(args.output, " ".join(str(x) for x in c) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    H, profile = _load_matrix(args.input)
    B = _load_basis(args.basis)
    if B.profile != profile:
        raise CliError("basis and matrix have different fields or orbit lengths", EXIT_INVALID)
    if B.ordering is not Ordering.POT:
        raise CliError("verify expects a POT basis of the code", EXIT_INVALID)
    f = profile.field
    problems = []
    dual = reduce_basis(buchberger([vec_to_polyvec(r, profile) for r in H], profile, Ordering.RPOT))
    for i, g in enumerate(B.vectors):
        for j, h in enumerate(dual.vectors):
            if scalar_product(g, h)[0]:
                problems.append(f"<g{i + 1}, h{j + 1}> != 0")
    G = generator_matrix(B) if B.reduced else None
    if G is not None:
        if G and not is_zero(mul_transpose(f, G, H)):
            problems.append("G * H^T != 0")
        if (rank(f, G) if G else 0) != profile.n - rank(f, H):
            problems.append("generator matrix rank differs from n - rank(H)")
    for p in problems:
        print(p)
    print("ok" if not problems else f"{len(problems)} check(s) failed")
    return EXIT_OK if not problems else EXIT_INVALID


CSV_FIELDS = ["n", "k", "m", "algorithm", "adds", "subs", "muls", "divs", "total", "estimate"]


def _metrics_rows(H, profile, algorithms: Sequence[str]) -> list[list]:
    f = profile.field
    k = profile.n - rank(f, H)
    est = estimate_complexity(profile.n, k, profile.m)
    rows = []
    for algo in algorithms:
        ops = measure_ops(H, profile, algo)
        rows.append([profile.n, k, profile.m, algo, ops.adds, ops.subs, ops.muls, ops.divs,
                     ops.total, est.for_algorithm(algo)])
    return rows


def cmd_metrics(args: argparse.Namespace) -> int:
    if args.rate_curve:
        rates = [i / 20 for i in range(21)]
        _write(args.output, n3_coefficient_csv(rates))
        return EXIT_OK
    algorithms = ["echelon", "transpose"] if args.algorithm == "both" else [args.algorithm]
    rows: list[list] = []
    if args.sweep:
        lo, hi = args.sweep
        if not 1 <= lo <= hi or args.step < 1:
            raise CliError("--sweep needs 1 <= N_MIN <= N_MAX and --step >= 1", EXIT_IO)
        rng = random.Random(args.seed)
        field = GF(2)
        for n in range(lo, hi + 1, args.step):
            inst = random_gqc(rng, field, partition_lengths(rng, n))
            rows += _metrics_rows(inst.H, inst.profile, algorithms)
    else:
        if not args.input:
            raise CliError("metrics needs -i FILE, --sweep or --rate-curve", EXIT_IO)
        H, profile = _load_matrix(args.input)
        rows = _metrics_rows(H, profile, algorithms)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    w.writerows(rows)
    _write(args.output, buf.getvalue())
    return EXIT_OK


def cmd_circuit(args: argparse.Namespace) -> int:
    B = _load_basis(args.basis)
    try:
        rep = circuit_bounds(B)
    except ValueError as e:
        raise CliError(str(e), EXIT_INVALID) from None
    lines = [
        f"n = {rep.n}, k = {rep.k}, m = {rep.m}",
        f"k_i = {list(rep.k_i)}, delta_i = {list(rep.delta)}",
        f"adders: {rep.adder_inner} <= {rep.adder_mid_column} <= {rep.adder_outer}"
        f" (row-weighted middle term {rep.adder_mid})",
        f"memory: {rep.memory_inner} <= {rep.memory_outer}",
        f"fg_shape: {'yes' if rep.fg_shape else 'no'}",
    ]
    status = EXIT_OK
    if args.simulate:
        try:
            spec = CodeSpec.from_basis(B)
            enc = FGSerialEncoder(spec)
        except (ValueError, BasisError) as e:
            raise CliError(f"cannot simulate: {e}", EXIT_INVALID) from None
        rng = random.Random(args.seed)
        q = B.profile.field.q
        mismatches = 0
        for _ in range(args.simulate):
            msg = [rng.randrange(q) for _ in range(spec.k)]
            if enc.run(msg).codeword != encode(msg, spec):
                mismatches += 1
        lines.append(f"serial encoder: {args.simulate - mismatches}/{args.simulate} messages match")
        if mismatches:
            status = EXIT_INTERNAL
    _write(args.output, "\n".join(lines) + "\n")
    return status


def cmd_checkgqc(args: argparse.Namespace) -> int:
    H, profile = _load_matrix(args.input)
    ok = check_gqc(H, profile)
    print("gqc" if ok else "not gqc")
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gqc", description="Gröbner bases and encoders for GQC codes")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="compute the POT Gröbner basis from a parity-check matrix")
    b.add_argument("-i", "--input", required=True)
    b.add_argument("-o", "--output")
    b.add_argument("--algorithm", choices=["echelon", "transpose"], default="transpose")
    b.add_argument("--no-reduce", action="store_true", help="emit the basis before reduction")
    b.set_defaults(func=cmd_basis)

    e = sub.add_parser("encode", help="systematically encode a message")
    e.add_argument("-b", "--basis", required=True)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("-m", "--message")
    g.add_argument("--message-file")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_encode)

    v = sub.add_parser("verify", help="check a basis against a parity-check matrix")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-b", "--basis", required=True)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("metrics", help="measured field operations vs closed-form estimates (CSV)")
    m.add_argument("-i", "--input")
    m.add_argument("-o", "--output")
    m.add_argument("--algorithm", choices=["echelon", "transpose", "both"], default="both")
    m.add_argument("--sweep", nargs=2, type=int, metavar=("N_MIN", "N_MAX"))
    m.add_argument("--step", type=int, default=8)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--rate-curve", action="store_true", help="emit n^3 coefficients vs rate instead")
    m.set_defaults(func=cmd_metrics)

    c = sub.add_parser("circuit", help="encoder circuit bounds for a reduced POT basis")
    c.add_argument("-b", "--basis", required=True)
    c.add_argument("-o", "--output")
    c.add_argument("--simulate", type=int, default=0, metavar="N",
                   help="compare the serial encoder with division on N random messages")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_circuit)

    k = sub.add_parser("check-gqc", help="exit 0 iff the matrix defines a GQC code")
    k.add_argument("-i", "--input", required=True)
    k.set_defaults(func=cmd_checkgqc)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"gqc: {e}", file=sys.stderr)
        return e.status
    except InexactDivisionError as e:
        print(f"gqc: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except ArithmeticError as e:
        print(f"gqc: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Matrix-taking subcommands read JSON (array of rows, entries integers or
"p/q" strings) or plain text (one row per line, whitespace-separated
entries); number-theory subcommands take plain integers. Every output is a
single JSON document on stdout, deterministic byte for byte. Exit status is
0 when a verdict was produced (whatever the verdict), 2 on bad input, 3 on
an internal consistency fault.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import InternalConsistencyError, MatrixParseError
from .matrices import RatMatrix
from .mpp import build_mpp_instance
from .numbertheory import (
    cyclotomic,
    lcm_upto,
    max_torsion_period,
    nu_poly,
    pi_poly_product,
    torsion_bound,
    totient,
)
from .torsion import (
    TorsionCertificate,
    decide_torsion_annihilation,
    oracle_cycle_detect,
    torsion_certificate,
    verify_certificate,
)


def _parse_entry(token, row: int, col: int) -> Fraction:
    # row and col are 1-based in every message.
    if isinstance(token, bool) or isinstance(token, float):
        raise MatrixParseError(f"non-exact entry at ({row},{col}): {token!r}")
    if not isinstance(token, (int, str)):
        raise MatrixParseError(f"malformed entry at ({row},{col}): {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise MatrixParseError(f"zero denominator at ({row},{col})") from None
    except ValueError:
        raise MatrixParseError(f"malformed entry at ({row},{col}): {token!r}") from None


def _grid_to_matrix(grid: list[list[Fraction]]) -> RatMatrix:
    if not grid:
        raise MatrixParseError("matrix has no rows")
    width = len(grid[0])
    for i, row in enumerate(grid[1:], start=2):
        if len(row) != width:
            raise MatrixParseError(f"ragged row {i}")
    if width != len(grid):
        raise MatrixParseError(
            f"matrix is {len(grid)} rows by {width} columns, must be square"
        )
    return RatMatrix(grid)


def parse_matrix(text: str | bytes, format: str = "json") -> RatMatrix:
    """Parse a matrix in the declared format, pinpointing any defect.

    >>> parse_matrix('[["1/2","0"],["0","1"]]')[0, 0]
    Fraction(1, 2)
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise MatrixParseError(f"not valid JSON: {err}") from None
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise MatrixParseError("JSON matrix must be an array of row arrays")
        rows = [
            [_parse_entry(tok, i, j) for j, tok in enumerate(row, start=1)]
            for i, row in enumerate(data, start=1)
        ]
    elif format == "text":
        rows = [
            [_parse_entry(tok, i, j) for j, tok in enumerate(line.split(), start=1)]
            for i, line in enumerate(text.splitlines(), start=1)
            if line.strip()
        ]
    else:
        raise MatrixParseError(f"unknown matrix format: {format!r}")
    return _grid_to_matrix(rows)


def emit_matrix(m: RatMatrix, format: str = "json") -> str:
    """Inverse of parse_matrix, entry for entry."""
    if format == "json":
        return json.dumps(m.to_data())
    if format == "text":
        return "\n".join(" ".join(str(e) for e in row) for row in m.rows)
    raise ValueError(f"unknown matrix format: {format!r}")


def _read_matrix_arg(source: str, format: str) -> RatMatrix:
    # An existing file wins; "-" is stdin; anything else is inline payload.
    if source == "-":
        return parse_matrix(sys.stdin.read(), format)
    if os.path.isdir(source):
        raise MatrixParseError(f"matrix input is a directory: {source}")
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as handle:
            return parse_matrix(handle.read(), format)
    return parse_matrix(source, format)


def _positive(name: str):
    def convert(value: str) -> int:
        n = int(value)
        if n < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {n}")
        return n

    return convert


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionkit",
        description=(
            "Decide whether two distinct powers of a rational square matrix "
            "coincide, with checkable certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "matrix",
            help="matrix input: a file path, '-' for stdin, or the payload itself",
        )
        cmd.add_argument(
            "--format",
            choices=("json", "text"),
            default="json",
            help="matrix input format (default json)",
        )
        return cmd

    decide = matrix_command("decide", "torsion verdict for a matrix")
    decide.add_argument(
        "--faithful",
        action="store_true",
        help="use the full annihilation test at n = 2*d*d instead of the certificate",
    )
    matrix_command("certificate", "torsion certificate for a matrix")
    verify = matrix_command("verify", "check a certificate against a matrix")
    verify.add_argument(
        "--certificate",
        required=True,
        help="path to the certificate JSON document ('-' for stdin)",
    )
    matrix_command("reduce-mpp", "emit the block pair (A, B) with A^n = B iff torsion")
    powers = matrix_command("powers", "brute-force search for a repeated power")
    powers.add_argument(
        "--cap",
        type=_positive("cap"),
        default=100,
        help="largest exponent examined (default 100)",
    )

    for name, help_text, metavar in (
        ("pi", "coefficients of pi_n, the product of the first n cyclotomics", "N"),
        ("cyclotomic", "coefficients of the n-th cyclotomic polynomial", "N"),
        ("nu", "coefficients of nu_n = (z-1)(z^2-1)...(z^n-1)", "N"),
        ("totient", "Euler totient of n", "N"),
        ("ell", "lcm(1..n)", "N"),
        ("bound", "largest m whose totient is at most d", "D"),
        ("maxperiod", "largest eventual period of a torsion matrix of order d", "D"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("n", type=_positive(metavar.lower()), metavar=metavar)

    return parser


def run(args: argparse.Namespace) -> str:
    """Dispatch one parsed request and return its output document."""
    command = args.command
    if command == "decide":
        m = _read_matrix_arg(args.matrix, args.format)
        if args.faithful:
            doc = {"torsion": decide_torsion_annihilation(m, faithful=True)}
        else:
            cert = torsion_certificate(m)
            doc = {"torsion": cert.torsion}
            if cert.torsion:
                doc["preperiod"] = cert.preperiod
                doc["period"] = cert.period
        return json.dumps(doc)
    if command == "certificate":
        m = _read_matrix_arg(args.matrix, args.format)
        return json.dumps(torsion_certificate(m).to_data())
    if command == "verify":
        m = _read_matrix_arg(args.matrix, args.format)
        if args.certificate == "-":
            raw = sys.stdin.read()
        else:
            with open(args.certificate, "r", encoding="utf-8") as handle:
                raw = handle.read()
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as err:
            raise ValueError(f"certificate is not valid JSON: {err}") from None
        cert = TorsionCertificate.from_data(doc)
        if not cert.torsion:
            raise ValueError("certificate does not claim torsion, nothing to verify")
        outcome = verify_certificate(m, cert)
        return json.dumps({"valid": outcome.ok, "reason": outcome.reason})
    if command == "reduce-mpp":
        m = _read_matrix_arg(args.matrix, args.format)
        inst = build_mpp_instance(m)
        return json.dumps(
            {"d": inst.source_order, "a": inst.a.to_data(), "b": inst.b.to_data()}
        )
    if command == "powers":
        m = _read_matrix_arg(args.matrix, args.format)
        hit = oracle_cycle_detect(m, args.cap)
        return json.dumps({"cap": args.cap, "repeat": list(hit) if hit else None})
    if command == "pi":
        return json.dumps(pi_poly_product(args.n).to_data())
    if command == "cyclotomic":
        return json.dumps(cyclotomic(args.n).to_data())
    if command == "nu":
        return json.dumps(nu_poly(args.n).to_data())
    if command == "totient":
        return json.dumps(totient(args.n))
    if command == "ell":
        return json.dumps(lcm_upto(args.n))
    if command == "bound":
        return json.dumps(torsion_bound(args.n))
    if command == "maxperiod":
        period, witness = max_torsion_period(args.n)
        return json.dumps({"period": period, "witness": sorted(witness)})
    raise InternalConsistencyError(f"unhandled subcommand: {command}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        document = run(args)
    except InternalConsistencyError as fault:
        print(f"internal fault: {fault}", file=sys.stderr)
        return 3
    except (MatrixParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(document)
    return 0


if __name__ == "__main__":
    sys.exit(main())

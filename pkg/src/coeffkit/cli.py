"""``coeffkit`` command-line front end.

Exit codes: 0 success, 1 verification found mismatches, 2 usage or domain
error, 3 fixed-width overflow.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import harness
from .errors import CoefficientOverflowError, DomainError
from .models import PatternSpec, RelationQuery
from .oracle import bounded_composition_count, unique_row_oracle
from .polyops import IntPolynomial, coefficient_of_product
from .relations import unique_row_closed, unique_value

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3

_BOLD = "\x1b[1m"
_RESET = "\x1b[0m"


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo} (got {value})")
        return value
    parse.__name__ = f"int>={lo}"
    return parse


def _power_list(text: str) -> list[int]:
    powers = []
    for token in text.split(","):
        try:
            value = int(token)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid power: {token!r}") from None
        if value not in (2, 3, 4):
            raise argparse.ArgumentTypeError(f"power must be 2, 3 or 4 (got {value})")
        powers.append(value)
    return powers


def _closed_power(text: str) -> int:
    powers = _power_list(text)
    if len(powers) != 1:
        raise argparse.ArgumentTypeError(f"expected a single power, got {text!r}")
    return powers[0]


def _csv_text(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json_text(command: str, inputs: dict, result) -> str:
    return json.dumps({"command": command, "inputs": inputs, "result": result})


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and getattr(stream, "isatty", lambda: False)()


def render_triangle(rows: list[list[int]], color: bool = False) -> str:
    """Center each row under the widest one, entries separated by one space."""
    lines = [" ".join(str(v) for v in row) for row in rows]
    width = max(len(line) for line in lines)
    out = []
    for row, line in zip(rows, lines):
        pad = " " * ((width - len(line)) // 2)
        if color:
            mid = len(row) // 2
            line = " ".join(f"{_BOLD}{v}{_RESET}" if i == mid else str(v)
                            for i, v in enumerate(row))
        out.append(pad + line)
    return "\n".join(out)


def _emit_rows(args, rows: list[list[int]], first_row: int = 1) -> str:
    if args.format == "json":
        return _json_text(args.command, _inputs(args), rows)
    if args.format == "csv":
        data = [(r, k, v) for r, row in enumerate(rows, start=first_row)
                for k, v in enumerate(row, start=1)]
        return _csv_text(["row", "position", "value"], data)
    return render_triangle(rows, color=_use_color(sys.stdout))


def _emit_value(args, value: int) -> str:
    if args.format == "json":
        return _json_text(args.command, _inputs(args), value)
    if args.format == "csv":
        inputs = _inputs(args)
        return _csv_text([*inputs, "value"], [[*inputs.values(), value]])
    return str(value)


def _inputs(args) -> dict:
    skip = {"command", "format", "handler", "as_printed_g4"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def cmd_triangle(args) -> tuple[str, int]:
    rows = [list(unique_row_closed(args.l, r)) for r in range(1, args.rows + 1)]
    return _emit_rows(args, rows), EXIT_OK


def cmd_unique(args) -> tuple[str, int]:
    row = list(unique_row_oracle(args.l, args.row))
    return _emit_rows(args, [row], first_row=args.row), EXIT_OK


def cmd_coeff(args) -> tuple[str, int]:
    value = bounded_composition_count(PatternSpec(args.n, args.l), args.m)
    return _emit_value(args, value), EXIT_OK


def cmd_eval_relation(args) -> tuple[str, int]:
    value = unique_value(RelationQuery(args.l, args.row, args.k))
    return _emit_value(args, value), EXIT_OK


def cmd_product(args) -> tuple[str, int]:
    poly = IntPolynomial.parse(args.poly)
    value = coefficient_of_product(poly, PatternSpec(args.n, args.l), args.m)
    return _emit_value(args, value), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    report = harness.run_verify(args.l, args.max_row, workers=args.workers,
                                as_printed=args.as_printed_g4)
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return _json_text(args.command, _inputs(args), report.as_dict()), code
    if args.format == "csv":
        return _csv_text(["l", "r", "k", "closed", "oracle"], report.mismatches), code
    powers = ",".join(str(l) for l in report.powers)
    lines = [f"checked l={powers} rows 1..{args.max_row}: "
             f"{len(report.mismatches)} mismatches in {report.elapsed:.3f}s"]
    lines += [f"mismatch l={m.l} r={m.r} k={m.k}: closed={m.closed} oracle={m.oracle}"
              for m in report.mismatches]
    return "\n".join(lines), code


def cmd_bench(args) -> tuple[str, int]:
    table = harness.run_bench(args.l, args.max_row, args.reps)
    if args.format == "json":
        return _json_text(args.command, _inputs(args), [b._asdict() for b in table]), EXIT_OK
    header = ["r", "width", "closed_seconds", "oracle_seconds"]
    if args.format == "csv":
        return _csv_text(header, table), EXIT_OK
    lines = [f"{'r':>6} {'width':>6} {'closed (s)':>12} {'oracle (s)':>12}"]
    lines += [f"{b.r:>6} {b.width:>6} {b.closed_seconds:>12.3e} {b.oracle_seconds:>12.3e}"
              for b in table]
    return "\n".join(lines), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coeffkit",
        description="Coefficients of (x^n + ... + 1)^l from closed-form relation functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")

    power = _int_at_least(1)

    p = sub.add_parser("triangle", parents=[fmt], help="print rows of a unique-coefficient triangle")
    p.add_argument("--l", type=_closed_power, required=True)
    p.add_argument("--rows", type=_int_at_least(1), required=True)
    p.set_defaults(handler=cmd_triangle)

    p = sub.add_parser("unique", parents=[fmt], help="one triangle row, computed by expansion")
    p.add_argument("--l", type=_int_at_least(2), required=True)
    p.add_argument("--row", type=_int_at_least(1), required=True)
    p.set_defaults(handler=cmd_unique)

    p = sub.add_parser("coeff", parents=[fmt], help="coefficient of x^m in (x^n+...+1)^l")
    p.add_argument("--n", type=_int_at_least(0), required=True)
    p.add_argument("--l", type=power, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_coeff)

    p = sub.add_parser("eval-relation", parents=[fmt], help="evaluate g_l at row r, position k")
    p.add_argument("--l", type=_closed_power, required=True)
    p.add_argument("--row", type=_int_at_least(1), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_eval_relation)

    p = sub.add_parser("product", parents=[fmt],
                       help="coefficient of x^m in p(x) * (x^n+...+1)^l")
    p.add_argument("--poly", required=True, help='ascending coefficients, e.g. "1,2" for 1+2x')
    p.add_argument("--n", type=_int_at_least(0), required=True)
    p.add_argument("--l", type=power, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("verify", parents=[fmt], help="compare closed forms with the oracle")
    p.add_argument("--l", type=_power_list, default=[2, 3, 4])
    p.add_argument("--max-row", type=_int_at_least(1), required=True)
    p.add_argument("--workers", type=_int_at_least(1), default=1)
    p.add_argument("--as-printed-g4", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", parents=[fmt], help="time closed forms against expansion")
    p.add_argument("--l", type=_closed_power, required=True)
    p.add_argument("--max-row", type=_int_at_least(1), required=True)
    p.add_argument("--reps", type=_int_at_least(1), default=3)
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.handler(args)
    except CoefficientOverflowError as exc:
        print(f"coeffkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except DomainError as exc:
        print(f"coeffkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""``swc`` command-line interface.

Exit codes: 0 success, 1 verification failure, 2 validation error,
3 mathematical inconsistency.  Errors are reported on stderr as
``<ErrorName>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MATHEMATICAL_ERRORS, SWCError, ValidationError
from .jobs import load_descriptor, run_decompose, run_job
from .superchar import build_matrix
from .tables import build_tables
from .verify import FAULTS, run_verification

EXIT_OK, EXIT_VERIFY, EXIT_VALIDATION, EXIT_MATH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ValidationError: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_compute(args) -> int:
    desc = load_descriptor(args.file)
    result = run_job(
        desc,
        max_degree=args.max_degree,
        delta=args.delta,
        allow_virtual=True if args.allow_virtual else None,
    )
    _emit(result.to_json() if args.format == "json" else result.to_text())
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.n < 1:
        raise ValidationError("n must be at least 1")
    rows = build_matrix(args.n).tolist()
    if args.format == "json":
        _emit(json.dumps(rows))
    else:
        width = max(len(str(x)) for r in rows for x in r)
        _emit("\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows))
    return EXIT_OK


def cmd_decompose(args) -> int:
    desc = load_descriptor(args.file)
    c = run_decompose(desc, allow_virtual=True if args.allow_virtual else None)
    if args.format == "json":
        _emit(json.dumps(c))
    else:
        _emit(" ".join(map(str, c)))
    return EXIT_OK


def cmd_tables(args) -> int:
    report = build_tables()
    _emit(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 1 or args.cases < 1:
        raise ValidationError("--max-n and --cases must be positive")
    report = run_verification(seed=args.seed, max_n=args.max_n, cases=args.cases, fault=args.inject_fault)
    _emit(report.to_text())
    if not report.ok:
        fail = report.first_failure
        print(f"verification failed: {fail.name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="swc", description="Stiefel-Whitney classes of real representations of GL_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="total class and closed forms for a job descriptor")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--delta", type=int, choices=(0, 1), default=None)
    p.add_argument("--allow-virtual", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("matrix", help="supercharacter table of C_2^n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("decompose", help="supercharacter multiplicities of a descriptor's character")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--allow-virtual", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("tables", help="recompute the w4 parity tables")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="seeded verification of every theorem check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SWCError as exc:
        print(f"{exc.label}: {exc}", file=sys.stderr)
        return EXIT_MATH if isinstance(exc, MATHEMATICAL_ERRORS) else EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end: ``wbr <command> --r R --s S [mode flags]``.

Exit codes: 0 when every verification passed, 1 when one failed (the
failing items are named on standard error), 2 on bad flags or parameters.
"""

from __future__ import annotations

import argparse
import logging
import sys
import typing as t
from pathlib import Path

from .common.config import Limits
from .common.exceptions import CompletionBudgetExceededError, InvalidParameterError, SizeLimitExceededError, WbrError
from .common.serialization import dump_report, parse_rational
from .common.types import Wall
from .report import BUILDERS, COMMANDS, GENERIC, Report, render_text, report_payload, resolve_mode
from .scalars import ModeKind

logger = logging.getLogger("wbrauer.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_PARAMETER_ERRORS = (InvalidParameterError, SizeLimitExceededError, CompletionBudgetExceededError)


def _delta(text: str) -> str:
    if text.strip() != GENERIC:
        parse_rational(text)
    return text.strip()


def _rational(text: str) -> str:
    parse_rational(text)
    return text.strip()


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(text)
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise ValueError(text)
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wbr", description="Exact computations in walled Brauer algebras.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--r", type=_nonnegative, required=True, help="Vertices left of the wall.")
    parser.add_argument("--s", type=_nonnegative, required=True, help="Vertices right of the wall.")
    parser.add_argument("--delta", type=_delta, help='Loop value: a rational "p/q" or "generic".')
    parser.add_argument("--q", type=_rational, help="Rational q for rational-qr.")
    parser.add_argument("--rho", type=_rational, help="Rational rho for rational-qr.")
    parser.add_argument("--N", dest="n", type=_nonnegative, help="Exponent with rho = q^N for generic-q.")
    parser.add_argument("--mode", choices=[kind.value for kind in ModeKind], help="Scalar mode (inferred by default).")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--seed", type=int, default=0, help="Seed for random specializations.")
    parser.add_argument("--size-cap", type=_positive, help="Largest r+s to accept (overrides WBR_SIZE_CAP).")
    parser.add_argument("--output", type=Path, help="Write the report here instead of standard output.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs.")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(args: argparse.Namespace) -> Report:
    """Dispatch parsed arguments to their report builder."""
    wall = Wall(args.r, args.s)
    mode = resolve_mode(args.mode, args.delta, args.q, args.rho, args.n)
    limits = Limits.from_env().with_size_cap(args.size_cap)
    builder = BUILDERS[args.command]
    if args.command == "qverify":
        return builder(wall, mode, limits, seed=args.seed)
    return builder(wall, mode, limits)


def render(report: Report, fmt: str) -> str:
    if fmt == "text":
        return render_text(report_payload(report)) + "\n"
    return dump_report(report_payload(report)) + "\n"


def main(argv: t.Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        report = run(args)
    except _PARAMETER_ERRORS as exc:
        print(f"wbr: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WbrError as exc:
        print(f"wbr: {args.command} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED

    text = render(report, args.format)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
        logger.info("wrote %s report to %s", args.command, args.output)
    else:
        sys.stdout.write(text)

    if not report.passed:
        print(f"wbr: {args.command} failed: {', '.join(report.failures)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

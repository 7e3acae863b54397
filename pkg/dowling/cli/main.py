#!/usr/bin/env python3
"""Command-line entry point for the dowling toolkit

Subcommands:
- table:  the r-Whitney triangle W_{m,r}(n,k)
- eval:   the bivariate r-Dowling polynomial D_{m,r}(n;x,y)
- series: generating-function coefficients
- verify: the identity suite over a parameter grid
- oracle: set-partition enumeration against the r-Stirling numbers

Global flags --format {json,csv,table} and --output PATH apply to every
subcommand. Exit status: 0 on success, 1 when a verification fails,
2 on usage, precondition or configuration errors.
"""

import argparse
import io
import sys
from typing import List, Optional

from dowling.cli.commands import evaluate, oracle, series, table, verify
from dowling.cli.formatters import OutputFormat
from dowling.core.errors import DowlingError
from dowling.core.utils import setup_logger

# Initialize logger
logger = setup_logger(__name__)

COMMANDS = (table, evaluate, series, verify, oracle)


def _add_global_flags(parser: argparse.ArgumentParser, default_format, default_output) -> None:
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=default_format)
    parser.add_argument("--output", metavar="PATH", default=default_output,
                        help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dowling",
        description="Exact r-Whitney numbers, bivariate r-Dowling polynomials and identity verification.",
    )
    _add_global_flags(parser, default_format=OutputFormat.TABLE.value, default_output=None)

    # Accepted after the subcommand too; values given there win
    shared = argparse.ArgumentParser(add_help=False)
    _add_global_flags(shared, default_format=argparse.SUPPRESS, default_output=argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, [shared])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        if not args.output:
            return args.handler(args, sys.stdout)
        # Rendered in full first so a refused command leaves no file behind
        buffer = io.StringIO(newline="")
        code = args.handler(args, buffer)
        with open(args.output, "w", encoding="utf-8", newline="") as out:
            out.write(buffer.getvalue())
        return code
    except DowlingError as e:
        logger.debug(f"{args.command} failed: {e}")
        print(f"dowling {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"dowling {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

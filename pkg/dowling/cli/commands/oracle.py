#!/usr/bin/env python3
"""
Oracle Command

Counts set partitions by enumeration and compares the count with the
r-Stirling number from the triangle.
"""

from dowling.cli.arguments import nat_arg
from dowling.cli.formatters import OutputFormat, write_json, write_rows
from dowling.core.exact import format_rational
from dowling.core.utils import setup_logger
from dowling.services.triangles.partition_oracle import partition_oracle
from dowling.services.triangles.whitney import rstirling2

# Initialize logger
logger = setup_logger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("oracle", parents=parents, help="enumerate r-restricted set partitions")
    parser.add_argument("--n", type=nat_arg, required=True)
    parser.add_argument("--k", type=nat_arg, required=True)
    parser.add_argument("--r", type=nat_arg, default=0)
    parser.set_defaults(handler=run)


def run(args, out) -> int:
    count = partition_oracle(args.n, args.k, args.r)
    expected = rstirling2(args.n, args.k, args.r)
    match = count == expected
    if not match:
        logger.error(f"Oracle mismatch at n={args.n}, k={args.k}, r={args.r}: {count} vs {expected}")

    record = {"n": args.n, "k": args.k, "r": args.r, "count": count, "expected": expected, "match": match}
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        write_json(out, record)
    elif fmt is OutputFormat.CSV:
        write_rows(out, fmt, tuple(record), [record])
    else:
        verdict = "match" if match else f"mismatch: triangle gives {format_rational(expected)}"
        out.write(f"{format_rational(count)} ({verdict})\n")
    return 0 if match else 1

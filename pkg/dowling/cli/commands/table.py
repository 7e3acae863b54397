#!/usr/bin/env python3
"""
Table Command

Emits the r-Whitney triangle W_{m,r}(n,k) as (n, k, value) rows.
"""

from dowling.cli.arguments import add_params, nat_arg
from dowling.cli.formatters import write_rows
from dowling.core.utils import setup_logger
from dowling.services.triangles.whitney import WhitneyParams, whitney_table

# Initialize logger
logger = setup_logger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("table", parents=parents, help="emit the W_{m,r}(n,k) triangle")
    add_params(parser)
    parser.add_argument("--max-n", type=nat_arg, required=True, help="last row")
    parser.set_defaults(handler=run)


def run(args, out) -> int:
    table = whitney_table(WhitneyParams(args.m, args.r), args.max_n)
    rows = ({"n": n, "k": k, "value": value} for n, k, value in table.entries())
    write_rows(out, args.format, ("n", "k", "value"), rows)
    logger.info(f"Emitted W table for m={args.m}, r={args.r} up to n={args.max_n}")
    return 0

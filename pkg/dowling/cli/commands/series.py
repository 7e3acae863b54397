#!/usr/bin/env python3
"""
Series Command

Prints the first order+1 coefficients of one of the generating functions:
egf, ogf-2f1, ogf-2f1-direct, ogf-pf (all of D_{m,r}(n;x,y)) or whitney-ogf
(of W_{m,r}(n,k) for fixed k).
"""

from dowling.cli.arguments import add_params, nat_arg, rational_arg
from dowling.cli.formatters import OutputFormat, write_json, write_rows
from dowling.core.config import Config
from dowling.core.exact import ONE, format_rational
from dowling.services.series.generating_functions import SeriesKind, build_series
from dowling.services.triangles.whitney import WhitneyParams


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("series", parents=parents, help="expand a generating function")
    parser.add_argument("--kind", choices=[k.value for k in SeriesKind], required=True)
    add_params(parser)
    parser.add_argument("--x", type=nat_arg, default=1, help="nonnegative integer x")
    parser.add_argument("--y", type=rational_arg, default=ONE)
    parser.add_argument("--k", type=nat_arg, default=0, help="column k for whitney-ogf")
    parser.add_argument("--order", type=nat_arg, default=Config.DEFAULT_SERIES_ORDER)
    parser.set_defaults(handler=run)


def run(args, out) -> int:
    params = WhitneyParams(args.m, args.r)
    series = build_series(args.kind, params, args.order, x=args.x, y=args.y, k=args.k)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        write_json(out, series.to_json())
    elif fmt is OutputFormat.CSV:
        write_rows(out, fmt, ("n", "coefficient"),
                   ({"n": n, "coefficient": c} for n, c in enumerate(series.coeffs)))
    else:
        out.write(", ".join(format_rational(c) for c in series.coeffs) + "\n")
    return 0

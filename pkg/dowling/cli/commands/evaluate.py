#!/usr/bin/env python3
"""
Eval Command

Prints D_{m,r}(n;x,y). In JSON the polynomial itself is included as
{m, r, n, coeffs}, coefficients on the basis (x)_k y^k.
"""

from dowling.cli.arguments import add_params, nat_arg, rational_arg
from dowling.cli.formatters import OutputFormat, write_json, write_rows
from dowling.core.exact import ONE, format_rational
from dowling.services.polynomials.dowling_poly import dowling_bivariate, explicit_eval
from dowling.services.triangles.whitney import WhitneyParams


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("eval", parents=parents, help="evaluate the bivariate r-Dowling polynomial")
    add_params(parser)
    parser.add_argument("--n", type=nat_arg, required=True, help="degree")
    parser.add_argument("--x", type=rational_arg, default=ONE)
    parser.add_argument("--y", type=rational_arg, default=ONE)
    parser.add_argument("--explicit", action="store_true",
                        help="use the explicit binomial-weight formula (integer x >= 0)")
    parser.set_defaults(handler=run)


def run(args, out) -> int:
    params = WhitneyParams(args.m, args.r)
    poly = dowling_bivariate(params, args.n)
    value = explicit_eval(params, args.n, args.x, args.y) if args.explicit else poly(args.x, args.y)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        write_json(out, {**poly.to_json(), "x": args.x, "y": args.y, "value": value})
    elif fmt is OutputFormat.CSV:
        write_rows(out, fmt, ("value",), [{"value": value}])
    else:
        out.write(format_rational(value) + "\n")
    return 0

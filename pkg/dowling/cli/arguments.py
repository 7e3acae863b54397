#!/usr/bin/env python3
"""Argument types shared by the subcommands."""

import argparse
from fractions import Fraction

from dowling.core.errors import PreconditionError
from dowling.core.exact import parse_rational


def rational_arg(value: str) -> Fraction:
    """argparse type for "p/q" and integer literals."""
    try:
        return parse_rational(value)
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def nat_arg(value: str) -> int:
    """argparse type for nonnegative integers."""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value!r}")
    return number


def add_params(parser: argparse.ArgumentParser) -> None:
    """Adds --m and --r."""
    parser.add_argument("--m", type=rational_arg, default=Fraction(1), help="parameter m (nonzero rational)")
    parser.add_argument("--r", type=rational_arg, default=Fraction(0), help="parameter r (rational)")

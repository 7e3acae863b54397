#!/usr/bin/env python3
"""
Exact Core Module

Arbitrary-precision rational scalars and the elementary combinatorial
primitives every other module consumes:
- parsing and rendering of "p/q" rationals
- powers with an explicit 0^0 convention
- falling and rising factorials, generalized binomial coefficients
- the binomial inversion pair

All functions are pure; values are immutable Fractions.
"""

import math
import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from dowling.core.errors import PreconditionError

# The universal number type
ExactRational = Fraction

# Indices n, k, l, i, j are plain ints validated with require_nat
NatIndex = int

RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """
    Parses a rational literal of the form "p/q" or an integer literal.

    Args:
        text (str): The literal, e.g. "3", "-1/2".

    Returns:
        Fraction: The value in lowest terms.

    Raises:
        PreconditionError: If the text is not a p/q or integer literal, or q is zero.
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise PreconditionError(f"not a rational literal: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise PreconditionError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def to_rational(value: RationalLike) -> Fraction:
    """Coerces an int, Fraction or rational literal to a Fraction."""
    if isinstance(value, bool):
        raise PreconditionError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise PreconditionError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Renders integers bare and everything else as "p/q"."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def require_nat(value, name: str = "index") -> int:
    """
    Validates a nonnegative integer index.

    Accepts ints and integral Fractions; returns the plain int.
    """
    if isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise PreconditionError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


def is_nat(value) -> bool:
    """True when value is a nonnegative integer (int or integral Fraction)."""
    try:
        require_nat(value)
    except PreconditionError:
        return False
    return True


def power(base: RationalLike, exponent: int, zero_to_zero: RationalLike = ONE) -> Fraction:
    """
    Exact nonnegative integer power.

    Args:
        base: The base.
        exponent (int): A nonnegative integer.
        zero_to_zero: The value taken by 0^0. The summations of this package
            assume 1; the identity suite flips it to 0 as a negative control.

    Returns:
        Fraction: base ** exponent.
    """
    base = to_rational(base)
    exponent = require_nat(exponent, "exponent")
    if exponent == 0:
        return to_rational(zero_to_zero) if base == 0 else ONE
    return base ** exponent


def falling_factorial(x: RationalLike, k: int) -> Fraction:
    """Returns (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1."""
    x = to_rational(x)
    k = require_nat(k, "k")
    return math.prod((x - i for i in range(k)), start=ONE)


def rising_factorial(a: RationalLike, k: int) -> Fraction:
    """Returns <a>_k = a(a+1)...(a+k-1), with <a>_0 = 1."""
    a = to_rational(a)
    k = require_nat(k, "k")
    return math.prod((a + i for i in range(k)), start=ONE)


def binomial_general(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient (x)_k / k! for rational x."""
    k = require_nat(k, "k")
    return falling_factorial(x, k) / math.factorial(k)


def binomial(n: int, k: int) -> int:
    """Integer binomial coefficient; 0 when k > n."""
    return math.comb(require_nat(n, "n"), require_nat(k, "k"))


class InversionDirection(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


def binomial_invert(seq: Sequence[RationalLike],
                    direction: Union[InversionDirection, str] = InversionDirection.FORWARD) -> List[Fraction]:
    """
    Applies one side of the binomial inversion pair.

    forward:  f_n = sum_{j<=n} C(n,j) g_j
    backward: g_n = sum_{j<=n} (-1)^(n-j) C(n,j) f_j

    Args:
        seq: A nonempty finite sequence, 0-indexed.
        direction: forward or backward.

    Returns:
        list: The transformed sequence, same length as the input.
    """
    values = [to_rational(v) for v in seq]
    if not values:
        raise PreconditionError("binomial inversion needs a nonempty sequence")
    direction = InversionDirection(direction)
    backward = direction is InversionDirection.BACKWARD
    out = []
    for n in range(len(values)):
        total = ZERO
        for j in range(n + 1):
            term = math.comb(n, j) * values[j]
            total += -term if backward and (n - j) % 2 else term
        out.append(total)
    return out


def rational_sum(values: Iterable[Fraction]) -> Fraction:
    """Exact sum that stays a Fraction for empty input."""
    return sum(values, ZERO)

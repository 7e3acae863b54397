#!/usr/bin/env python3
"""
Rational Function Module

Quotients of univariate polynomials in t over exact rationals, kept reduced:
common factors are cancelled with a polynomial GCD and the denominator's
lowest nonzero coefficient is scaled to 1. Equality is decided by
cross-multiplication.

This is where the terminating Gauss series with t-dependent parameters is
summed: its individual terms have poles at t = 0 that only cancel in the
reduced sum, so the sum is formed here and expanded afterwards.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import Poly

from dowling.core.errors import PreconditionError, SeriesExpansionError
from dowling.core.exact import ONE, RationalLike, format_rational, require_nat, to_rational
from dowling.core.utils import setup_logger, log_exception
from dowling.services.series.polynomial import (
    coeffs_of,
    constant_poly,
    lowest_coefficient,
    poly_from_coeffs,
    to_sympy,
)
from dowling.services.series.truncated import TruncatedSeries

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True, eq=False)
class RationalFunction:
    numerator: Poly
    denominator: Poly

    @classmethod
    def of(cls, numerator: Poly, denominator: Poly) -> "RationalFunction":
        """Reduces numerator/denominator and normalizes the denominator."""
        if denominator.is_zero:
            raise PreconditionError("rational function with a zero denominator")
        if numerator.is_zero:
            return cls(constant_poly(0), constant_poly(1))
        numerator, denominator = numerator.cancel(denominator, include=True)
        scale = to_sympy(1 / lowest_coefficient(denominator))
        return cls(numerator.mul_ground(scale), denominator.mul_ground(scale))

    @classmethod
    def from_coeffs(cls, numerator, denominator=(1,)) -> "RationalFunction":
        """Builds from ascending coefficient lists in t."""
        return cls.of(poly_from_coeffs(numerator), poly_from_coeffs(denominator))

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalFunction":
        return cls.from_coeffs([value])

    @classmethod
    def coerce(cls, value: Union["RationalFunction", RationalLike]) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls.constant(value)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction.of(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction.of(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.is_zero:
            raise PreconditionError("division by the zero rational function")
        return RationalFunction.of(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        exponent = require_nat(exponent, "exponent")
        return RationalFunction.of(self.numerator ** exponent, self.denominator ** exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalFunction, int, Fraction)):
            return NotImplemented
        other = RationalFunction.coerce(other)
        return (self.numerator * other.denominator - other.numerator * self.denominator).is_zero

    __hash__ = None

    def value_at_zero_defined(self) -> bool:
        return self.denominator.eval(0) != 0

    @log_exception(logger)
    def expand(self, order: int) -> TruncatedSeries:
        """
        Expands at t = 0 to the given order.

        Raises:
            SeriesExpansionError: If the reduced denominator vanishes at t = 0.
        """
        order = require_nat(order, "order")
        if not self.value_at_zero_defined():
            raise SeriesExpansionError("rational function has a pole at t = 0")
        numerator = TruncatedSeries.from_coeffs(coeffs_of(self.numerator), order)
        denominator = TruncatedSeries.from_coeffs(coeffs_of(self.denominator), order)
        return numerator / denominator

    def to_json(self) -> dict:
        return {
            "num": [format_rational(c) for c in coeffs_of(self.numerator)] or ["0"],
            "den": [format_rational(c) for c in coeffs_of(self.denominator)],
        }

    def __repr__(self) -> str:
        return f"RationalFunction(({self.numerator.as_expr()}) / ({self.denominator.as_expr()}))"


def t_linear(constant: RationalLike, slope: RationalLike) -> RationalFunction:
    """constant + slope * t"""
    return RationalFunction.from_coeffs([constant, slope])


@log_exception(logger)
def rf_pochhammer(f: Union[RationalFunction, RationalLike], k: int) -> RationalFunction:
    """Rising factorial f (f+1) ... (f+k-1) of a rational function; k = 0 gives 1."""
    f = RationalFunction.coerce(f)
    k = require_nat(k, "k")
    result = RationalFunction.constant(ONE)
    for j in range(k):
        result = result * (f + j)
    return result


@log_exception(logger)
def hyp2f1_terminating(a: Union[RationalFunction, RationalLike], xdeg: int,
                       c: Union[RationalFunction, RationalLike], z: RationalLike) -> RationalFunction:
    """
    Sums 2F1(a, -xdeg; c | z) = sum_{k<=xdeg} <a>_k <-xdeg>_k / <c>_k * z^k / k!.

    Args:
        a: Upper parameter (rational function of t or scalar).
        xdeg (int): The series stops because <-xdeg>_k = 0 for k > xdeg.
        c: Lower parameter (rational function of t or scalar).
        z: Scalar argument.

    Returns:
        RationalFunction: The reduced sum.

    Raises:
        PreconditionError: If <c>_k is identically zero for some retained k.
    """
    a = RationalFunction.coerce(a)
    c = RationalFunction.coerce(c)
    xdeg = require_nat(xdeg, "xdeg")
    z = to_rational(z)
    total = RationalFunction.constant(ONE)
    term = RationalFunction.constant(ONE)
    for k in range(xdeg):
        if term.is_zero:
            break
        lower = c + k
        if lower.is_zero:
            raise PreconditionError(f"lower parameter factor <c>_{k + 1} vanishes identically")
        # term_{k+1} = term_k (a+k)(-xdeg+k) / (c+k) * z / (k+1)
        term = term * (a + k) / lower * (Fraction(-xdeg + k) * z / (k + 1))
        total = total + term
    logger.debug(f"Summed terminating 2F1 with {xdeg + 1} terms at z={z}")
    return total


def hyp2f1_scalar(a: RationalLike, xdeg: int, c: RationalLike, z: RationalLike) -> Fraction:
    """Scalar version of hyp2f1_terminating for constant parameters."""
    value = hyp2f1_terminating(a, xdeg, c, z)
    numerator = coeffs_of(value.numerator)
    return (numerator[0] if numerator else Fraction(0)) / coeffs_of(value.denominator)[0]


def pfaff_holds(a: RationalLike, c: RationalLike, x: int, z: RationalLike) -> bool:
    """
    Terminating Pfaff/Euler transformation:
    (1-z)^x 2F1(-x, c-a; c | z/(z-1)) = 2F1(a, -x; c | z).
    """
    a, c, z = to_rational(a), to_rational(c), to_rational(z)
    x = require_nat(x, "x")
    if z == 1:
        raise PreconditionError("z = 1 leaves z/(z-1) undefined")
    left = (1 - z) ** x * hyp2f1_scalar(c - a, x, c, z / (z - 1))
    right = hyp2f1_scalar(a, x, c, z)
    return left == right


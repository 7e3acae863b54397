#!/usr/bin/env python3
"""
Bivariate r-Dowling Polynomial Module

D_{m,r}(n;x,y) = sum_k W_{m,r}(n,k) (x)_k y^k, stored on the basis
{(x)_k y^k} and never expanded into monomials in x.

This module provides:
- construction and evaluation of the polynomial
- r-Dowling numbers and the univariate r-Dowling polynomial
- the explicit binomial-weight formula (nonnegative integer x only)
- the r-shift recurrences and their inverse
- the convexity check in n
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from dowling.core.config import Config
from dowling.core.errors import PreconditionError
from dowling.core.exact import (
    ONE,
    InversionDirection,
    RationalLike,
    binomial_invert,
    falling_factorial,
    format_rational,
    power,
    rational_sum,
    require_nat,
    to_rational,
)
from dowling.core.utils import setup_logger, log_exception
from dowling.services.triangles.whitney import (
    WhitneyParams,
    shared_table,
    vertical_recurrence_row,
)

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True)
class DowlingPoly:
    params: WhitneyParams
    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        require_nat(self.degree, "degree")
        if len(self.coeffs) != self.degree + 1:
            raise PreconditionError(f"degree {self.degree} needs {self.degree + 1} coefficients")

    def __call__(self, x: RationalLike, y: RationalLike) -> Fraction:
        return eval_poly(self, x, y)

    def agrees_with(self, other: "DowlingPoly", y: RationalLike) -> bool:
        """
        Equality by two routes: coefficient comparison on the stored basis and
        evaluation at degree + 1 distinct x for the given y.
        """
        if self.degree != other.degree or self.coeffs != other.coeffs:
            return False
        return all(eval_poly(self, x, y) == eval_poly(other, x, y) for x in range(self.degree + 1))

    def to_json(self) -> dict:
        return {
            "m": format_rational(self.params.m),
            "r": format_rational(self.params.r),
            "n": self.degree,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }


@lru_cache(maxsize=Config.CACHE_SIZE)
def dowling_bivariate(params: WhitneyParams, n: int) -> DowlingPoly:
    """
    Builds D_{m,r}(n;x,y) with coefficient k equal to W_{m,r}(n,k).
    """
    n = require_nat(n, "n")
    return DowlingPoly(params=params, degree=n, coeffs=shared_table(params, n).row(n))


def eval_poly(p: DowlingPoly, x: RationalLike, y: RationalLike) -> Fraction:
    """Returns sum_k c_k (x)_k y^k."""
    x, y = to_rational(x), to_rational(y)
    return rational_sum(c * falling_factorial(x, k) * power(y, k) for k, c in enumerate(p.coeffs))


@lru_cache(maxsize=Config.CACHE_SIZE)
def dowling_value(params: WhitneyParams, n: int, x: Fraction, y: Fraction) -> Fraction:
    """D_{m,r}(n;x,y) for rational x, y."""
    return eval_poly(dowling_bivariate(params, n), x, y)


def dowling_number(params: WhitneyParams, n: int) -> Fraction:
    """The r-Dowling number sum_k W_{m,r}(n,k)."""
    return rational_sum(dowling_bivariate(params, n).coeffs)


def dowling_univariate(params: WhitneyParams, n: int, x: RationalLike) -> Fraction:
    """The r-Dowling polynomial D_{m,r}(n;x) = sum_k W_{m,r}(n,k) x^k."""
    x = to_rational(x)
    return rational_sum(c * power(x, k) for k, c in enumerate(dowling_bivariate(params, n).coeffs))


@log_exception(logger)
def explicit_eval(params: WhitneyParams, n: int, x: int, y: RationalLike,
                  zero_to_zero: RationalLike = ONE) -> Fraction:
    """
    Explicit formula sum_{i<=x} C(x,i) (mi+r)^n (y/m)^i (1-y/m)^(x-i).

    Args:
        params (WhitneyParams): The pair (m, r).
        n (int): Degree.
        x (int): A nonnegative integer; the sum is finite only then.
        y: Rational.
        zero_to_zero: Value of 0^0 in the powers of the sum.

    Raises:
        PreconditionError: If x is not a nonnegative integer.
    """
    n = require_nat(n, "n")
    x = require_nat(x, "x")
    y = to_rational(y)
    m, r = params.m, params.r
    p = y / m
    return rational_sum(
        math.comb(x, i) * power(m * i + r, n, zero_to_zero) * power(p, i, zero_to_zero)
        * power(1 - p, x - i, zero_to_zero)
        for i in range(x + 1)
    )


class ShiftDirection(str, Enum):
    UP = "up"
    DOWN = "down"


@log_exception(logger)
def shift_r(params: WhitneyParams, n: int, x: RationalLike, y: RationalLike,
            direction: Union[ShiftDirection, str] = ShiftDirection.UP) -> Fraction:
    """
    The r-shift recurrences.

    up:   sum_j C(n,j) D_{m,r}(j;x,y), which equals D_{m,r+1}(n;x,y)
    down: sum_j (-1)^(n-j) C(n,j) D_{m,r+1}(j;x,y), which equals D_{m,r}(n;x,y)
    """
    n = require_nat(n, "n")
    x, y = to_rational(x), to_rational(y)
    direction = ShiftDirection(direction)
    if direction is ShiftDirection.UP:
        values = [dowling_value(params, j, x, y) for j in range(n + 1)]
        return binomial_invert(values, InversionDirection.FORWARD)[n]
    shifted = params.shifted(1)
    values = [dowling_value(shifted, j, x, y) for j in range(n + 1)]
    return binomial_invert(values, InversionDirection.BACKWARD)[n]


def shift_r_poly(params: WhitneyParams, n: int) -> DowlingPoly:
    """D_{m,r+1}(n;x,y) assembled through the vertical recurrence on W_{m,r}."""
    n = require_nat(n, "n")
    return DowlingPoly(params=params.shifted(1), degree=n, coeffs=vertical_recurrence_row(params, n))


@dataclass(frozen=True)
class ConvexityVerdict:
    holds: bool
    values: Tuple[Fraction, ...]
    first_violation: Optional[int] = None


@log_exception(logger)
def convexity_check(params: WhitneyParams, x: int, y: RationalLike, nmax: int) -> ConvexityVerdict:
    """
    Checks D(n+1;x,y) <= (D(n;x,y) + D(n+2;x,y)) / 2 for every n <= nmax - 2.

    The domain is the one on which every binomial weight of the explicit
    formula is nonnegative and every base mi + r is nonnegative.

    Raises:
        PreconditionError: Outside m > 0, r >= 0, 0 <= y <= m, integer x >= 0.
    """
    x = require_nat(x, "x")
    nmax = require_nat(nmax, "nmax")
    y = to_rational(y)
    m, r = params.m, params.r
    if m <= 0 or r < 0 or not (0 <= y <= m):
        raise PreconditionError("convexity is checked only for m > 0, r >= 0 and 0 <= y <= m")
    values = tuple(dowling_value(params, n, Fraction(x), y) for n in range(nmax + 1))
    for n in range(nmax - 1):
        if 2 * values[n + 1] > values[n] + values[n + 2]:
            return ConvexityVerdict(holds=False, values=values, first_violation=n)
    return ConvexityVerdict(holds=True, values=values)

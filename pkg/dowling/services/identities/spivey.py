#!/usr/bin/env python3
"""
Spivey Module

The two generalized Spivey formulas for bivariate r-Dowling polynomials and
their x -> infinity limits.

    first form:  D(l+n;x,y) = sum_k sum_i (mk)^(n-i)   C(n,i) W(l,k) D(i;x-k,y)          (x)_k y^k
    second form: D(l+n;x,y) = sum_k sum_i (mk+r)^(n-i) C(n,i) W(l,k) m^i B_i(x-k, y/m)  (x)_k y^k

In numbers mode the inner polynomials become D(i) and m^i B_i(1/m) and the
factor (x)_k y^k disappears. The second form carries m^i; without it the
identity fails for m != 1.

Left sides come from dowling_poly (table route). Right sides are literal
double sums over W values from the explicit formula, so the two sides share
no evaluation code.
"""

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from dowling.core.config import Config
from dowling.core.exact import (
    ONE,
    ZERO,
    RationalLike,
    falling_factorial,
    format_rational,
    power,
    rational_sum,
    require_nat,
    to_rational,
)
from dowling.core.utils import setup_logger
from dowling.services.identities.models import IdentityInstance
from dowling.services.polynomials.dowling_poly import dowling_number, dowling_univariate, dowling_value
from dowling.services.polynomials.limits import UPoly, falling_ratio, substituted_dowling
from dowling.services.triangles.whitney import WhitneyParams, whitney_explicit

# Initialize logger
logger = setup_logger(__name__)

BELL_PARAMS = WhitneyParams(1, 0)


class SpiveyMode(str, Enum):
    BIVARIATE = "bivariate"
    NUMBERS = "numbers"


# ---------------------------------------------------------------------------
# Literal right-hand-side building blocks
# ---------------------------------------------------------------------------

@lru_cache(maxsize=Config.CACHE_SIZE)
def literal_w(params: WhitneyParams, n: int, k: int) -> Fraction:
    """W(n,k) by the alternating explicit sum."""
    if k > n:
        return ZERO
    return whitney_explicit(params, n, k)


@lru_cache(maxsize=Config.CACHE_SIZE)
def literal_dowling(params: WhitneyParams, n: int, x: Fraction, y: Fraction) -> Fraction:
    """sum_j W(n,j) (x)_j y^j with every W taken from the explicit sum."""
    return rational_sum(literal_w(params, n, j) * falling_factorial(x, j) * power(y, j) for j in range(n + 1))


@lru_cache(maxsize=Config.CACHE_SIZE)
def literal_univariate(params: WhitneyParams, n: int, x: Fraction) -> Fraction:
    """sum_j W(n,j) x^j."""
    return rational_sum(literal_w(params, n, j) * power(x, j) for j in range(n + 1))


def spivey_sum(params: WhitneyParams, l: int, n: int,
               base: Callable[[int], Fraction],
               inner: Callable[[int, int], Fraction],
               outer: Callable[[int], Fraction],
               zero_to_zero: RationalLike = ONE) -> Fraction:
    """
    sum_{k<=l} sum_{i<=n} base(k)^(n-i) C(n,i) W(l,k) inner(i,k) outer(k).

    base(k)^(n-i) is the only power in the sum that can meet 0^0; its value
    there is zero_to_zero.
    """
    total = ZERO
    for k in range(l + 1):
        w = literal_w(params, l, k)
        if not w:
            continue
        b = base(k)
        row = ZERO
        for i in range(n + 1):
            row += power(b, n - i, zero_to_zero) * math.comb(n, i) * inner(i, k)
        total += w * row * outer(k)
    return total


def first_form_base(params: WhitneyParams) -> Callable[[int], Fraction]:
    return lambda k: params.m * k


def second_form_base(params: WhitneyParams) -> Callable[[int], Fraction]:
    return lambda k: params.m * k + params.r


def _bindings(params: WhitneyParams, l: int, n: int, **extra) -> dict:
    return {"m": params.m, "r": params.r, "l": l, "n": n, **extra}


# ---------------------------------------------------------------------------
# The two forms
# ---------------------------------------------------------------------------

def check_spivey_first(params: WhitneyParams, l: int, n: int,
                       x: RationalLike = 0, y: RationalLike = 1,
                       mode: Union[SpiveyMode, str] = SpiveyMode.BIVARIATE,
                       zero_to_zero: RationalLike = ONE) -> IdentityInstance:
    """
    First generalized Spivey formula.

    Args:
        params (WhitneyParams): The pair (m, r).
        l (int), n (int): Split of the degree l + n.
        x, y: Polynomial arguments; ignored in numbers mode.
        mode: bivariate (polynomial identity) or numbers (r-Dowling numbers).
        zero_to_zero: Value taken by 0^0 in the right side.

    Returns:
        IdentityInstance: Both sides and the verdict.
    """
    l, n = require_nat(l, "l"), require_nat(n, "n")
    mode = SpiveyMode(mode)
    base = first_form_base(params)

    if mode is SpiveyMode.NUMBERS:
        lhs = dowling_number(params, l + n)
        rhs = spivey_sum(params, l, n, base,
                         lambda i, k: literal_univariate(params, i, ONE),
                         lambda k: ONE, zero_to_zero)
        return IdentityInstance(identity_id="spivey-first-numbers",
                                bindings=_bindings(params, l, n), lhs=lhs, rhs=rhs)

    x, y = to_rational(x), to_rational(y)
    lhs = dowling_value(params, l + n, x, y)
    rhs = spivey_sum(params, l, n, base,
                     lambda i, k: literal_dowling(params, i, x - k, y),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    return IdentityInstance(identity_id="spivey-first-bivariate",
                            bindings=_bindings(params, l, n, x=x, y=y), lhs=lhs, rhs=rhs)


def check_spivey_second(params: WhitneyParams, l: int, n: int,
                        x: RationalLike = 0, y: RationalLike = 1,
                        mode: Union[SpiveyMode, str] = SpiveyMode.BIVARIATE,
                        zero_to_zero: RationalLike = ONE) -> IdentityInstance:
    """
    Second generalized Spivey formula; the inner polynomials are bivariate
    Bell polynomials B_i(x-k, y/m), or Bell polynomials B_i(1/m) in numbers mode.
    """
    l, n = require_nat(l, "l"), require_nat(n, "n")
    mode = SpiveyMode(mode)
    m = params.m
    base = second_form_base(params)

    if mode is SpiveyMode.NUMBERS:
        lhs = dowling_number(params, l + n)
        rhs = spivey_sum(params, l, n, base,
                         lambda i, k: m ** i * literal_univariate(BELL_PARAMS, i, 1 / m),
                         lambda k: ONE, zero_to_zero)
        return IdentityInstance(identity_id="spivey-second-numbers",
                                bindings=_bindings(params, l, n), lhs=lhs, rhs=rhs)

    x, y = to_rational(x), to_rational(y)
    lhs = dowling_value(params, l + n, x, y)
    rhs = spivey_sum(params, l, n, base,
                     lambda i, k: m ** i * literal_dowling(BELL_PARAMS, i, x - k, y / m),
                     lambda k: falling_factorial(x, k) * power(y, k), zero_to_zero)
    return IdentityInstance(identity_id="spivey-second-bivariate",
                            bindings=_bindings(params, l, n, x=x, y=y), lhs=lhs, rhs=rhs)


# ---------------------------------------------------------------------------
# x -> infinity limits
# ---------------------------------------------------------------------------

def _limit_sum(params: WhitneyParams, l: int, n: int, y: Fraction,
               base: Callable[[int], Fraction],
               inner: Callable[[int, int], UPoly],
               zero_to_zero: RationalLike) -> UPoly:
    # The bivariate right side with y -> y/x, as a polynomial in u = 1/x
    total = UPoly.constant(0)
    for k in range(l + 1):
        w = literal_w(params, l, k)
        if not w:
            continue
        outer = falling_ratio(0, k).scale(power(y, k))
        for i in range(n + 1):
            scalar = power(base(k), n - i, zero_to_zero) * math.comb(n, i) * w
            if scalar:
                total = total + (inner(i, k) * outer).scale(scalar)
    return total


def limit_first_form(params: WhitneyParams, l: int, n: int, y: RationalLike,
                     zero_to_zero: RationalLike = ONE) -> UPoly:
    """Right side of the first form after y -> y/x, in u = 1/x."""
    y = to_rational(y)
    return _limit_sum(params, l, n, y, first_form_base(params),
                      lambda i, k: substituted_dowling(params, i, k, y), zero_to_zero)


def limit_second_form(params: WhitneyParams, l: int, n: int, y: RationalLike,
                      zero_to_zero: RationalLike = ONE) -> UPoly:
    """Right side of the second form after y -> y/x, in u = 1/x."""
    y = to_rational(y)
    m = params.m
    return _limit_sum(params, l, n, y, second_form_base(params),
                      lambda i, k: substituted_dowling(BELL_PARAMS, i, k, y / m).scale(m ** i), zero_to_zero)


def check_limit_form(params: WhitneyParams, l: int, n: int, y: RationalLike,
                     second: bool = False, zero_to_zero: RationalLike = ONE) -> IdentityInstance:
    """
    Compares the univariate value D(l+n; y) with the u^0 coefficient of
    the reduced right side of the first (or second) form.
    """
    l, n = require_nat(l, "l"), require_nat(n, "n")
    y = to_rational(y)
    reduce = limit_second_form if second else limit_first_form
    reduced = reduce(params, l, n, y, zero_to_zero)
    lhs = dowling_univariate(params, l + n, y)
    logger.debug(f"Limit form at l={l}, n={n}, y={format_rational(y)}: u-degree {reduced.degree}")
    return IdentityInstance(
        identity_id="limit-second-form" if second else "limit-first-form",
        bindings=_bindings(params, l, n, y=y),
        lhs=lhs,
        rhs=reduced.constant_term,
    )

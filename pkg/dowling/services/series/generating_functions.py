#!/usr/bin/env python3
"""
Generating Functions Module

Builds the generating functions of W_{m,r}(n,k) and D_{m,r}(n;x,y) from
scratch and checks them coefficientwise against directly computed values:
- exponential: e^{rt} [1 + y(e^{mt}-1)/m]^x, by finite binomial expansion
- two-variable exponential: the same with t = u + v, as a double series
- ordinary, three routes:
    * 1/(1-rt) ((m-y)/m)^x 2F1((rt-1)/(mt), -x; ((m+r)t-1)/(mt) | y/(y-m))
    * 1/(1-rt) 2F1(-x, 1; ((m+r)t-1)/(mt) | y/m), before the Pfaff transformation
    * sum_i C(x,i)(y/m)^i(1-y/m)^(x-i) / (1 - (mi+r)t), from the explicit formula
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from dowling.core.config import Config
from dowling.core.errors import PreconditionError
from dowling.core.exact import ONE, RationalLike, power, require_nat, to_rational
from dowling.core.utils import setup_logger, log_exception
from dowling.services.polynomials.dowling_poly import dowling_value
from dowling.services.series.bivariate import BiSeries
from dowling.services.series.rational_function import (
    RationalFunction,
    hyp2f1_terminating,
    rf_pochhammer,
    t_linear,
)
from dowling.services.series.truncated import TruncatedSeries
from dowling.services.triangles.whitney import WhitneyParams, whitney_number

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True)
class SeriesVerdict:
    """Outcome of a coefficientwise comparison."""
    holds: bool
    order: Union[int, Tuple[int, int]]
    first_mismatch: Optional[Union[int, Tuple[int, int]]] = None
    expected: Optional[Fraction] = None
    actual: Optional[Fraction] = None


def _binomial_weight(x: int, i: int, p: Fraction) -> Fraction:
    # C(x,i) p^i (1-p)^(x-i)
    return math.comb(x, i) * power(p, i) * power(1 - p, x - i)


def _compare(series: TruncatedSeries, expected) -> SeriesVerdict:
    for n in range(series.order + 1):
        want = expected(n)
        if series.coeffs[n] != want:
            logger.warning(f"Series mismatch at t^{n}: expected {want}, got {series.coeffs[n]}")
            return SeriesVerdict(False, series.order, n, want, series.coeffs[n])
    return SeriesVerdict(True, series.order)


# ---------------------------------------------------------------------------
# Exponential generating functions
# ---------------------------------------------------------------------------

def whitney_egf(params: WhitneyParams, k: int, order: int) -> TruncatedSeries:
    """e^{rt} (e^{mt} - 1)^k / (m^k k!)"""
    k = require_nat(k, "k")
    m, r = params.m, params.r
    inner = TruncatedSeries.exp_linear(m, order) - 1
    return TruncatedSeries.exp_linear(r, order) * inner ** k / (m ** k * math.factorial(k))


def whitney_egf_check(params: WhitneyParams, k: int, order: int) -> SeriesVerdict:
    """Coefficient n of the W EGF equals W(n,k)/n! for n <= order."""
    series = whitney_egf(params, k, order)
    return _compare(series, lambda n: whitney_number(params, n, k) / math.factorial(n))


@lru_cache(maxsize=Config.CACHE_SIZE)
def dowling_egf(params: WhitneyParams, x: int, y: Fraction, order: int) -> TruncatedSeries:
    """
    e^{rt} [1 + y(e^{mt}-1)/m]^x by finite binomial expansion:
    e^{rt} sum_k C(x,k) (y/m)^k (e^{mt}-1)^k.
    """
    x = require_nat(x, "x")
    order = require_nat(order, "order")
    m, r = params.m, params.r
    inner = TruncatedSeries.exp_linear(m, order) - 1
    total = TruncatedSeries.constant(0, order)
    power_of_inner = TruncatedSeries.constant(ONE, order)
    for k in range(x + 1):
        total = total + power_of_inner.scale(math.comb(x, k) * (y / m) ** k)
        power_of_inner = power_of_inner * inner
    return TruncatedSeries.exp_linear(r, order) * total


@log_exception(logger)
def egf_check(params: WhitneyParams, x: int, y: RationalLike, order: int) -> SeriesVerdict:
    """
    Confirms coefficient n of e^{rt}[1 + y(e^{mt}-1)/m]^x equals D(n;x,y)/n! for n <= order.

    Raises:
        PreconditionError: If x is not a nonnegative integer.
    """
    x = require_nat(x, "x")
    y = to_rational(y)
    series = dowling_egf(params, x, y, order)
    return _compare(series, lambda n: dowling_value(params, n, Fraction(x), y) / math.factorial(n))


def dowling_egf_two_variable(params: WhitneyParams, x: int, y: RationalLike,
                             a_order: int, b_order: int) -> BiSeries:
    """e^{r(u+v)} [1 + y(e^{m(u+v)}-1)/m]^x as a double series."""
    x = require_nat(x, "x")
    y = to_rational(y)
    m, r = params.m, params.r
    inner = BiSeries.exp_linear_sum(m, a_order, b_order) - 1
    total = BiSeries.constant(0, a_order, b_order)
    power_of_inner = BiSeries.constant(ONE, a_order, b_order)
    for k in range(x + 1):
        total = total + power_of_inner.scale(math.comb(x, k) * (y / m) ** k)
        power_of_inner = power_of_inner * inner
    return BiSeries.exp_linear_sum(r, a_order, b_order) * total


@log_exception(logger)
def egf_two_variable_check(params: WhitneyParams, x: int, y: RationalLike,
                           a_order: int, b_order: int) -> SeriesVerdict:
    """Coefficient of u^a v^b equals D(a+b;x,y)/(a! b!) for a <= A, b <= B."""
    x = require_nat(x, "x")
    y = to_rational(y)
    series = dowling_egf_two_variable(params, x, y, a_order, b_order)
    for a in range(series.orders[0] + 1):
        for b in range(series.orders[1] + 1):
            want = dowling_value(params, a + b, Fraction(x), y) / (math.factorial(a) * math.factorial(b))
            if series.coefficient(a, b) != want:
                logger.warning(f"Two-variable mismatch at u^{a} v^{b}")
                return SeriesVerdict(False, series.orders, (a, b), want, series.coefficient(a, b))
    return SeriesVerdict(True, series.orders)


# ---------------------------------------------------------------------------
# Ordinary generating functions
# ---------------------------------------------------------------------------

def _lower_parameter(params: WhitneyParams) -> RationalFunction:
    # ((m+r)t - 1) / (mt)
    m, r = params.m, params.r
    return t_linear(-1, m + r) / t_linear(0, m)


def _upper_parameter(params: WhitneyParams) -> RationalFunction:
    # (rt - 1) / (mt)
    m, r = params.m, params.r
    return t_linear(-1, r) / t_linear(0, m)


def whitney_ogf_function(params: WhitneyParams, k: int) -> RationalFunction:
    """1/(m^k (1-rt)) * (-1)^k / <((m+r)t-1)/(mt)>_k"""
    k = require_nat(k, "k")
    m, r = params.m, params.r
    sign = -1 if k % 2 else 1
    return sign / (rf_pochhammer(_lower_parameter(params), k) * t_linear(1, -r) * m ** k)


def whitney_ogf(params: WhitneyParams, k: int, order: int) -> TruncatedSeries:
    """Expansion of the W OGF; coefficient n is W(n,k)."""
    return whitney_ogf_function(params, k).expand(order)


@lru_cache(maxsize=Config.CACHE_SIZE)
def dowling_ogf_function(params: WhitneyParams, x: int, y: Fraction) -> RationalFunction:
    """1/(1-rt) ((m-y)/m)^x 2F1(a, -x; c | y/(y-m)) as a reduced rational function."""
    m, r = params.m, params.r
    hyper = hyp2f1_terminating(_upper_parameter(params), x, _lower_parameter(params), y / (y - m))
    return hyper * ((m - y) / m) ** x / t_linear(1, -r)


@log_exception(logger)
def ogf_hypergeometric(params: WhitneyParams, x: int, y: RationalLike, order: int) -> TruncatedSeries:
    """
    Ordinary generating function of D(n;x,y) in its hypergeometric form.

    Raises:
        PreconditionError: If y = m or x is not a nonnegative integer.
    """
    x = require_nat(x, "x")
    y = to_rational(y)
    if y == params.m:
        raise PreconditionError("the 2F1 argument y/(y-m) is undefined at y = m")
    series = dowling_ogf_function(params, x, y).expand(order)
    logger.info(f"Expanded 2F1 OGF for m={params.m}, r={params.r}, x={x}, y={y} to order {order}")
    return series


@lru_cache(maxsize=Config.CACHE_SIZE)
def dowling_ogf_direct_function(params: WhitneyParams, x: int, y: Fraction) -> RationalFunction:
    """1/(1-rt) 2F1(-x, 1; c | y/m), the form before the Pfaff transformation."""
    hyper = hyp2f1_terminating(ONE, x, _lower_parameter(params), y / params.m)
    return hyper / t_linear(1, -params.r)


@log_exception(logger)
def ogf_hypergeometric_direct(params: WhitneyParams, x: int, y: RationalLike, order: int) -> TruncatedSeries:
    """Ordinary generating function of D(n;x,y) before the Pfaff transformation; y = m is allowed."""
    x = require_nat(x, "x")
    y = to_rational(y)
    return dowling_ogf_direct_function(params, x, y).expand(order)


@log_exception(logger)
def ogf_partial_fractions(params: WhitneyParams, x: int, y: RationalLike, order: int) -> TruncatedSeries:
    """sum_i C(x,i)(y/m)^i(1-y/m)^(x-i) / (1 - (mi+r)t), expanded to the given order."""
    x = require_nat(x, "x")
    y = to_rational(y)
    m, r = params.m, params.r
    total = TruncatedSeries.constant(0, order)
    for i in range(x + 1):
        weight = _binomial_weight(x, i, y / m)
        if weight:
            total = total + TruncatedSeries.geometric(m * i + r, order).scale(weight)
    return total


def direct_values(params: WhitneyParams, x: int, y: RationalLike, order: int) -> TruncatedSeries:
    """The sequence D(0..order; x, y) from the polynomial definition."""
    y = to_rational(y)
    return TruncatedSeries.from_coeffs(
        [dowling_value(params, n, Fraction(x), y) for n in range(order + 1)], order
    )


class SeriesKind(str, Enum):
    EGF = "egf"
    OGF_2F1 = "ogf-2f1"
    OGF_2F1_DIRECT = "ogf-2f1-direct"
    OGF_PF = "ogf-pf"
    WHITNEY_OGF = "whitney-ogf"


def build_series(kind: Union[SeriesKind, str], params: WhitneyParams, order: int,
                 x: int = 0, y: RationalLike = 1, k: int = 0) -> TruncatedSeries:
    """Dispatches to the generating function named by kind."""
    kind = SeriesKind(kind)
    if kind is SeriesKind.EGF:
        return dowling_egf(params, require_nat(x, "x"), to_rational(y), order)
    if kind is SeriesKind.OGF_2F1:
        return ogf_hypergeometric(params, x, y, order)
    if kind is SeriesKind.OGF_2F1_DIRECT:
        return ogf_hypergeometric_direct(params, x, y, order)
    if kind is SeriesKind.OGF_PF:
        return ogf_partial_fractions(params, x, y, order)
    return whitney_ogf(params, k, order)

#!/usr/bin/env python3
"""
Specialization Module

The Bell and r-Bell families as specializations of the r-Dowling family:
m = 1 gives the r-Bell objects, m = 1 and r = 0 the Bell objects.
"""

import inspect
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Union

from dowling.core.errors import PreconditionError
from dowling.core.exact import RationalLike, require_nat, to_rational
from dowling.core.utils import setup_logger, log_exception
from dowling.services.polynomials.dowling_poly import (
    dowling_number,
    dowling_univariate,
    dowling_value,
)
from dowling.services.triangles.whitney import WhitneyParams

# Initialize logger
logger = setup_logger(__name__)

BELL = WhitneyParams(1, 0)


def rbell_params(r: int) -> WhitneyParams:
    return WhitneyParams(1, require_nat(r, "r"))


def bell_number(n: int) -> Fraction:
    return dowling_number(BELL, n)


def bell_poly(n: int, x: RationalLike) -> Fraction:
    return dowling_univariate(BELL, n, x)


def bell_bivariate(n: int, x: RationalLike, y: RationalLike) -> Fraction:
    return dowling_value(BELL, n, to_rational(x), to_rational(y))


def rbell_number(n: int, r: int) -> Fraction:
    return dowling_number(rbell_params(r), n)


def rbell_poly(n: int, r: int, x: RationalLike) -> Fraction:
    return dowling_univariate(rbell_params(r), n, x)


def rbell_bivariate(n: int, r: int, x: RationalLike, y: RationalLike) -> Fraction:
    return dowling_value(rbell_params(r), n, to_rational(x), to_rational(y))


def dowling_univariate_value(m: RationalLike, r: RationalLike, n: int, x: RationalLike) -> Fraction:
    return dowling_univariate(WhitneyParams(m, r), n, x)


class Specialization(str, Enum):
    BELL_NUMBER = "bell-number"
    BELL_POLY = "bell-poly"
    BELL_BIVARIATE = "bell-bivariate"
    RBELL_NUMBER = "rbell-number"
    RBELL_POLY = "rbell-poly"
    RBELL_BIVARIATE = "rbell-bivariate"
    DOWLING_UNIVARIATE = "dowling-univariate"


_VARIANTS: Dict[Specialization, Callable[..., Fraction]] = {
    Specialization.BELL_NUMBER: bell_number,
    Specialization.BELL_POLY: bell_poly,
    Specialization.BELL_BIVARIATE: bell_bivariate,
    Specialization.RBELL_NUMBER: rbell_number,
    Specialization.RBELL_POLY: rbell_poly,
    Specialization.RBELL_BIVARIATE: rbell_bivariate,
    Specialization.DOWLING_UNIVARIATE: dowling_univariate_value,
}


@log_exception(logger)
def specialize(variant: Union[Specialization, str], **args) -> Fraction:
    """
    Evaluates one member of the Bell / r-Bell / univariate Dowling families.

    Args:
        variant: bell-number(n), bell-poly(n, x), bell-bivariate(n, x, y),
            rbell-number(n, r), rbell-poly(n, r, x), rbell-bivariate(n, r, x, y),
            dowling-univariate(m, r, n, x).
        **args: The variant's arguments by name.

    Raises:
        PreconditionError: Unknown variant or wrong arguments.
    """
    try:
        variant = Specialization(variant)
    except ValueError:
        raise PreconditionError(f"unknown specialization: {variant!r}") from None
    fn = _VARIANTS[variant]
    try:
        inspect.signature(fn).bind(**args)
    except TypeError as e:
        raise PreconditionError(f"bad arguments for {variant.value}: {e}") from None
    return fn(**args)

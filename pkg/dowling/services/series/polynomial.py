#!/usr/bin/env python3
"""
Polynomial Helpers

Bridges between Fraction coefficient lists and sympy polynomials over QQ.
Coefficient lists are ascending (index i holds the coefficient of gen**i).
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence

import sympy
from sympy import Poly, QQ

from dowling.core.config import Config
from dowling.core.exact import RationalLike, to_rational

# Generators used across the series engine
T = sympy.Symbol("t")
U = sympy.Symbol("u")


def to_sympy(value: RationalLike) -> sympy.Rational:
    value = to_rational(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def poly_from_coeffs(coeffs: Sequence[RationalLike], gen: sympy.Symbol = T) -> Poly:
    """Builds a Poly over QQ from ascending coefficients."""
    descending = [to_sympy(c) for c in reversed(list(coeffs))] or [sympy.Integer(0)]
    return Poly.from_list(descending, gen, domain=QQ)


def coeffs_of(poly: Poly) -> List[Fraction]:
    """Ascending Fraction coefficients, without trailing zeros (the zero polynomial gives [])."""
    if poly.is_zero:
        return []
    return [from_sympy(c) for c in reversed(poly.all_coeffs())]


def constant_poly(value: RationalLike, gen: sympy.Symbol = T) -> Poly:
    return poly_from_coeffs([value], gen)


@lru_cache(maxsize=Config.CACHE_SIZE)
def linear_poly(constant: Fraction, slope: Fraction, gen: sympy.Symbol = T) -> Poly:
    """constant + slope * gen"""
    return poly_from_coeffs([constant, slope], gen)


def lowest_coefficient(poly: Poly) -> Fraction:
    """The coefficient of the lowest-degree nonzero term."""
    for c in coeffs_of(poly):
        if c != 0:
            return c
    raise ZeroDivisionError("the zero polynomial has no nonzero coefficient")

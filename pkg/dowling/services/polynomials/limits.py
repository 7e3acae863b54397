#!/usr/bin/env python3
"""
Limit Reduction Module

Exact x -> infinity limits. After y is replaced by y/x, every expression in
(x)_k (y/x)^k becomes a polynomial in u = 1/x:

    (x - s)_k / x^k = prod_{j<k} (1 - (s + j) u)

so the limit is the u^0 coefficient, read off without any numeric process.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from sympy import Poly

from dowling.core.config import Config
from dowling.core.exact import ONE, RationalLike, format_rational, power, require_nat, to_rational
from dowling.core.utils import setup_logger
from dowling.services.series.polynomial import U, coeffs_of, constant_poly, linear_poly, to_sympy
from dowling.services.triangles.whitney import WhitneyParams, shared_table

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True, eq=False)
class UPoly:
    """A polynomial in the auxiliary variable u = 1/x."""
    poly: Poly

    @classmethod
    def constant(cls, value: RationalLike) -> "UPoly":
        return cls(constant_poly(value, U))

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Ascending coefficients with trailing zeros trimmed."""
        return tuple(coeffs_of(self.poly))

    @property
    def constant_term(self) -> Fraction:
        coeffs = self.coeffs
        return coeffs[0] if coeffs else Fraction(0)

    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.poly + other.poly)

    def __mul__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.poly * other.poly)

    def scale(self, c: RationalLike) -> "UPoly":
        return UPoly(self.poly.mul_ground(to_sympy(c)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]


@lru_cache(maxsize=Config.CACHE_SIZE)
def falling_ratio(shift: int, k: int) -> UPoly:
    """(x - shift)_k / x^k as prod_{j<k} (1 - (shift + j) u)."""
    k = require_nat(k, "k")
    result = UPoly.constant(ONE)
    for j in range(k):
        result = result * UPoly(linear_poly(ONE, Fraction(-(shift + j)), U))
    return result


def substituted_dowling(params: WhitneyParams, n: int, shift: int, y: RationalLike) -> UPoly:
    """
    D_{m,r}(n; x - shift, y/x) as a polynomial in u:
    sum_j W(n,j) y^j prod_{s<j} (1 - (shift + s) u).
    """
    n = require_nat(n, "n")
    y = to_rational(y)
    row = shared_table(params, n).row(n)
    total = UPoly.constant(0)
    for j, w in enumerate(row):
        if w:
            total = total + falling_ratio(shift, j).scale(w * power(y, j))
    return total


def limit_reduction(params: WhitneyParams, n: int, y: RationalLike) -> UPoly:
    """
    sum_k W(n,k) (x)_k (y/x)^k under x = 1/u, i.e.
    sum_k W(n,k) y^k prod_{i=1}^{k-1} (1 - i u).

    Its constant term is the univariate value D_{m,r}(n;y).
    """
    reduced = substituted_dowling(params, n, 0, y)
    logger.debug(f"Limit polynomial for n={n}, y={y} has degree {reduced.degree}")
    return reduced

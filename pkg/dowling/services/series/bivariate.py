#!/usr/bin/env python3
"""
Bivariate Series Module

Truncated double series sum_{a<=A, b<=B} c_{a,b} u^a v^b over exact rationals.
Products truncate each variable independently to the smaller order.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from dowling.core.errors import PreconditionError
from dowling.core.exact import ONE, ZERO, RationalLike, require_nat, to_rational
from dowling.services.series.truncated import TruncatedSeries


@dataclass(frozen=True)
class BiSeries:
    orders: Tuple[int, int]
    coeffs: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        a_order, b_order = self.orders
        if len(self.coeffs) != a_order + 1 or any(len(row) != b_order + 1 for row in self.coeffs):
            raise PreconditionError(f"coefficient matrix must be {a_order + 1} x {b_order + 1}")

    @classmethod
    def constant(cls, value: RationalLike, a_order: int, b_order: int) -> "BiSeries":
        value = to_rational(value)
        a_order, b_order = require_nat(a_order, "A"), require_nat(b_order, "B")
        rows = tuple(
            tuple(value if (a, b) == (0, 0) else ZERO for b in range(b_order + 1))
            for a in range(a_order + 1)
        )
        return cls((a_order, b_order), rows)

    @classmethod
    def outer(cls, in_u: TruncatedSeries, in_v: TruncatedSeries) -> "BiSeries":
        """f(u) g(v) from two univariate series."""
        return cls(
            (in_u.order, in_v.order),
            tuple(tuple(x * y for y in in_v.coeffs) for x in in_u.coeffs),
        )

    @classmethod
    def exp_linear_sum(cls, c: RationalLike, a_order: int, b_order: int) -> "BiSeries":
        """e^(c(u+v)) = e^(cu) e^(cv)."""
        return cls.outer(TruncatedSeries.exp_linear(c, a_order), TruncatedSeries.exp_linear(c, b_order))

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.coeffs[a][b]

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            return other
        return BiSeries.constant(other, *self.orders)

    def __add__(self, other) -> "BiSeries":
        other = self._coerce(other)
        a_order = min(self.orders[0], other.orders[0])
        b_order = min(self.orders[1], other.orders[1])
        return BiSeries(
            (a_order, b_order),
            tuple(
                tuple(self.coeffs[a][b] + other.coeffs[a][b] for b in range(b_order + 1))
                for a in range(a_order + 1)
            ),
        )

    __radd__ = __add__

    def __sub__(self, other) -> "BiSeries":
        return self + self._coerce(other).scale(-1)

    def scale(self, c: RationalLike) -> "BiSeries":
        c = to_rational(c)
        return BiSeries(self.orders, tuple(tuple(c * x for x in row) for row in self.coeffs))

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            return self.scale(other)
        a_order = min(self.orders[0], other.orders[0])
        b_order = min(self.orders[1], other.orders[1])
        rows = []
        for a in range(a_order + 1):
            row = []
            for b in range(b_order + 1):
                total = ZERO
                for i in range(a + 1):
                    left, right = self.coeffs[i], other.coeffs[a - i]
                    for j in range(b + 1):
                        total += left[j] * right[b - j]
                row.append(total)
            rows.append(tuple(row))
        return BiSeries((a_order, b_order), tuple(rows))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiSeries":
        exponent = require_nat(exponent, "exponent")
        result = BiSeries.constant(ONE, *self.orders)
        for _ in range(exponent):
            result = result * self
        return result

#!/usr/bin/env python3
"""
Truncated Series Module

Univariate formal power series over exact rationals, truncated at a fixed
order N: sum_{n<=N} a_n t^n + O(t^(N+1)). Binary operations carry the
minimum order of their operands.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple, Union

from dowling.core.errors import PreconditionError, SeriesExpansionError
from dowling.core.exact import ONE, ZERO, RationalLike, format_rational, require_nat, to_rational
from dowling.core.utils import setup_logger, log_exception

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        require_nat(self.order, "order")
        if len(self.coeffs) != self.order + 1:
            raise PreconditionError(f"series of order {self.order} needs {self.order + 1} coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RationalLike], order: int) -> "TruncatedSeries":
        """Pads with zeros or truncates to exactly order + 1 coefficients."""
        order = require_nat(order, "order")
        values = [to_rational(c) for c in list(coeffs)[: order + 1]]
        values += [ZERO] * (order + 1 - len(values))
        return cls(order, tuple(values))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def exp_linear(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        """e^(ct): coefficients c^n / n!."""
        c = to_rational(c)
        return cls.from_coeffs([c ** n / math.factorial(n) for n in range(order + 1)], order)

    @classmethod
    def geometric(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        """1 / (1 - ct): coefficients c^n."""
        c = to_rational(c)
        return cls.from_coeffs([c ** n for n in range(order + 1)], order)

    def coefficient(self, n: int) -> Fraction:
        n = require_nat(n, "n")
        if n > self.order:
            raise PreconditionError(f"coefficient {n} is beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, min(order, self.order))

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(order, tuple(a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = to_rational(c)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            out.append(sum((self.coeffs[i] * other.coeffs[n - i] for i in range(n + 1)), ZERO))
        return TruncatedSeries(order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        exponent = require_nat(exponent, "exponent")
        result = TruncatedSeries.constant(ONE, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(ONE / to_rational(other))
        if other.coeffs[0] == 0:
            raise SeriesExpansionError("division by a series with zero constant term")
        order = min(self.order, other.order)
        lead = other.coeffs[0]
        out = []
        for n in range(order + 1):
            acc = self.coeffs[n] - sum((other.coeffs[j] * out[n - j] for j in range(1, n + 1)), ZERO)
            out.append(acc / lead)
        return TruncatedSeries(order, tuple(out))

    def to_json(self) -> list:
        return [format_rational(a) for a in self.coeffs]


class SeriesOp(str, Enum):
    ADD = "add"
    MUL = "mul"
    INT_POW = "int-pow"
    EXP_LINEAR = "exp-linear"


@log_exception(logger)
def series_arith(op: Union[SeriesOp, str], *operands) -> TruncatedSeries:
    """
    Dispatches one series operation.

    add(s1, s2), mul(s1, s2): series operands, result at the minimum order.
    int-pow(s, e): e >= 0.
    exp-linear(c, N): the series of e^(ct) to order N.
    """
    op = SeriesOp(op)
    if op is SeriesOp.ADD:
        left, right = operands
        return left + right
    if op is SeriesOp.MUL:
        left, right = operands
        return left * right
    if op is SeriesOp.INT_POW:
        base, exponent = operands
        return base ** exponent
    c, order = operands
    return TruncatedSeries.exp_linear(c, order)

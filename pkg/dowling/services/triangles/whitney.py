#!/usr/bin/env python3
"""
Whitney Triangle Module

This module computes the r-Whitney numbers of the second kind W_{m,r}(n,k)
by three independent routes:
- the triangular recurrence W(n+1,k) = W(n,k-1) + (mk+r) W(n,k) (table route)
- the alternating explicit sum (explicit route)
- iterated forward differences of t -> (mt+r)^n at t = 0 (Newton route)

Specializations: r-Stirling numbers are W_{1,r}, classical Stirling numbers
of the second kind are W_{1,0}.

Completed tables are immutable; the shared cache replaces a table with a
larger one instead of mutating it.
"""

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from dowling.core.config import Config
from dowling.core.errors import PreconditionError
from dowling.core.exact import (
    ONE,
    ZERO,
    RationalLike,
    falling_factorial,
    format_rational,
    power,
    require_nat,
    to_rational,
)
from dowling.core.utils import setup_logger, log_exception

# Initialize logger
logger = setup_logger(__name__)


@dataclass(frozen=True)
class WhitneyParams:
    """The parameter pair (m, r) of W_{m,r}; m must be nonzero."""
    m: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", to_rational(self.m))
        object.__setattr__(self, "r", to_rational(self.r))
        if self.m == 0:
            raise PreconditionError("m must be nonzero")

    def shifted(self, delta: RationalLike = 1) -> "WhitneyParams":
        """Returns the pair (m, r + delta)."""
        return WhitneyParams(self.m, self.r + to_rational(delta))

    def to_dict(self) -> dict:
        return {"m": format_rational(self.m), "r": format_rational(self.r)}


@dataclass(frozen=True)
class WhitneyTable:
    """
    The triangle W_{m,r}(n,k) for 0 <= k <= n <= max_n.

    rows[n] holds the n+1 entries of row n; entries with k > n are zero.
    """
    params: WhitneyParams
    max_n: int
    rows: Tuple[Tuple[Fraction, ...], ...]

    def entry(self, n: int, k: int) -> Fraction:
        n = require_nat(n, "n")
        k = require_nat(k, "k")
        if n > self.max_n:
            raise PreconditionError(f"row {n} is beyond this table (max_n={self.max_n})")
        if k > n:
            return ZERO
        return self.rows[n][k]

    def row(self, n: int) -> Tuple[Fraction, ...]:
        n = require_nat(n, "n")
        if n > self.max_n:
            raise PreconditionError(f"row {n} is beyond this table (max_n={self.max_n})")
        return self.rows[n]

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Yields (n, k, value) in row-major order."""
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value

    def extended(self, max_n: int) -> "WhitneyTable":
        """Returns a new table covering max_n, continuing the recurrence from this one."""
        max_n = require_nat(max_n, "max_n")
        if max_n <= self.max_n:
            return self
        return _build_table(self.params, max_n, list(self.rows))


def _build_table(params: WhitneyParams, max_n: int, seed_rows: List[Tuple[Fraction, ...]]) -> WhitneyTable:
    m, r = params.m, params.r
    rows = list(seed_rows)
    while len(rows) <= max_n:
        previous = rows[-1]
        n = len(previous) - 1
        row = []
        for k in range(n + 2):
            left = previous[k - 1] if k >= 1 else ZERO
            stay = previous[k] if k <= n else ZERO
            row.append(left + (m * k + r) * stay)
        rows.append(tuple(row))
    return WhitneyTable(params=params, max_n=max_n, rows=tuple(rows))


@log_exception(logger)
def whitney_table(params: WhitneyParams, max_n: int) -> WhitneyTable:
    """
    Builds the full triangle by the triangular recurrence.

    Args:
        params (WhitneyParams): The pair (m, r).
        max_n (int): Last row to compute.

    Returns:
        WhitneyTable: Rows 0..max_n, seeded with W(0,0) = 1.
    """
    max_n = require_nat(max_n, "max_n")
    table = _build_table(params, max_n, [(ONE,)])
    logger.debug(f"Built W table for m={params.m}, r={params.r} up to n={max_n}")
    return table


_TABLES: Dict[WhitneyParams, WhitneyTable] = {}
_TABLES_LOCK = threading.Lock()


def shared_table(params: WhitneyParams, n: int) -> WhitneyTable:
    """Returns a cached table covering row n, replacing the cached one with a larger table if needed."""
    n = require_nat(n, "n")
    with _TABLES_LOCK:
        table = _TABLES.get(params)
        if table is None:
            table = whitney_table(params, max(n, 16))
        elif table.max_n < n:
            table = table.extended(max(n, 2 * table.max_n))
        _TABLES[params] = table
        return table


def whitney_number(params: WhitneyParams, n: int, k: int) -> Fraction:
    """W_{m,r}(n,k) from the shared table."""
    return shared_table(params, n).entry(n, k)


@log_exception(logger)
def whitney_explicit(params: WhitneyParams, n: int, k: int) -> Fraction:
    """
    Explicit route: (1/(m^k k!)) sum_j (-1)^(k-j) C(k,j) (mj+r)^n.

    Returns zero for k > n, as the k-th difference of a degree-n polynomial.
    """
    n = require_nat(n, "n")
    k = require_nat(k, "k")
    m, r = params.m, params.r
    total = ZERO
    for j in range(k + 1):
        term = math.comb(k, j) * power(m * j + r, n)
        total += -term if (k - j) % 2 else term
    return total / (m ** k * math.factorial(k))


@lru_cache(maxsize=Config.CACHE_SIZE)
def newton_row(params: WhitneyParams, n: int) -> Tuple[Fraction, ...]:
    """
    Newton route for a whole row: the leading entries of the difference
    table of (mt+r)^n at t = 0..n, each divided by m^k k!.
    """
    n = require_nat(n, "n")
    m, r = params.m, params.r
    values = [power(m * t + r, n) for t in range(n + 1)]
    leading = []
    while values:
        leading.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return tuple(d / (m ** k * math.factorial(k)) for k, d in enumerate(leading))


def whitney_newton(params: WhitneyParams, n: int, k: int) -> Fraction:
    """W_{m,r}(n,k) as the k-th forward difference at 0 of t -> (mt+r)^n, over m^k k!."""
    n = require_nat(n, "n")
    k = require_nat(k, "k")
    row = newton_row(params, n)
    return row[k] if k <= n else ZERO


def rstirling2(n: int, k: int, r: int) -> Fraction:
    """The r-Stirling number of the second kind {n+r, k+r}_r = W_{1,r}(n,k)."""
    r = require_nat(r, "r")
    return whitney_number(WhitneyParams(1, r), n, k)


def stirling2(n: int, k: int) -> Fraction:
    """Classical Stirling number of the second kind S(n,k) = W_{1,0}(n,k)."""
    return rstirling2(n, k, 0)


def vertical_recurrence_row(params: WhitneyParams, n: int) -> Tuple[Fraction, ...]:
    """
    Row n of W_{m,r+1} from the W_{m,r} triangle:
    W_{m,r+1}(n,k) = sum_{j=k}^{n} C(n,j) W_{m,r}(j,k).
    """
    n = require_nat(n, "n")
    table = shared_table(params, n)
    return tuple(
        sum((math.comb(n, j) * table.entry(j, k) for j in range(k, n + 1)), ZERO)
        for k in range(n + 1)
    )


def horizontal_gf_holds(params: WhitneyParams, n: int) -> bool:
    """Checks (mt+r)^n = sum_k m^k W(n,k) (t)_k at every integer t in 0..n."""
    n = require_nat(n, "n")
    row = shared_table(params, n).row(n)
    m, r = params.m, params.r
    for t in range(n + 1):
        expansion = sum((m ** k * w * falling_factorial(t, k) for k, w in enumerate(row)), ZERO)
        if expansion != power(m * t + r, n):
            logger.warning(f"Horizontal expansion fails for m={m}, r={r}, n={n} at t={t}")
            return False
    return True

#!/usr/bin/env python3
"""
Partition Oracle Module

Counts set partitions by exhaustive enumeration, as an independent check on
the r-Stirling numbers. Partitions of {1, ..., N} are generated as restricted
growth strings a_1 ... a_N (a_1 = 0, a_i <= 1 + max(a_1..a_{i-1})); block
b holds the elements i with a_i = b.

Elements 1..r lie in pairwise distinct blocks exactly when the string starts
with 0, 1, ..., r-1, so the r-condition is enforced by fixing that prefix.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from dowling.core.config import Config
from dowling.core.errors import EnumerationLimitError
from dowling.core.exact import require_nat
from dowling.core.utils import setup_logger, log_exception

# Initialize logger
logger = setup_logger(__name__)


def restricted_growth_strings(size: int, prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
    """
    Generates every restricted growth string of the given length that starts with prefix.

    Args:
        size (int): Number of elements N.
        prefix: A valid restricted growth string of length <= N.

    Yields:
        tuple: One string per set partition.
    """
    size = require_nat(size, "size")
    current: List[int] = list(prefix)
    if len(current) > size:
        return

    def extend(blocks: int) -> Iterator[Tuple[int, ...]]:
        if len(current) == size:
            yield tuple(current)
            return
        for block in range(blocks + 1):
            current.append(block)
            yield from extend(max(blocks, block + 1))
            current.pop()

    yield from extend(max(current) + 1 if current else 0)


def _check_guard(n: int, r: int) -> None:
    if n + r > Config.ORACLE_LIMIT:
        raise EnumerationLimitError(
            f"partition enumeration is limited to n + r <= {Config.ORACLE_LIMIT}, got {n + r}"
        )


@log_exception(logger)
@lru_cache(maxsize=None)
def partition_oracle_row(n: int, r: int) -> Tuple[int, ...]:
    """
    Enumerates partitions of {1..n+r} with 1..r in distinct blocks, tallied by block count.

    Returns:
        tuple: Entry k counts the partitions with exactly k + r blocks, for k = 0..n.
    """
    n = require_nat(n, "n")
    r = require_nat(r, "r")
    _check_guard(n, r)
    counts = [0] * (n + 1)
    for rgs in restricted_growth_strings(n + r, tuple(range(r))):
        blocks = max(rgs) + 1 if rgs else 0
        counts[blocks - r] += 1
    logger.debug(f"Enumerated {sum(counts)} partitions for n={n}, r={r}")
    return tuple(counts)


@log_exception(logger)
def partition_oracle(n: int, k: int, r: int) -> Fraction:
    """
    Counts partitions of {1..n+r} into exactly k+r nonempty blocks with
    elements 1..r in pairwise distinct blocks.

    Args:
        n (int): Number of free elements.
        k (int): Number of blocks beyond the r distinguished ones.
        r (int): Number of distinguished elements.

    Returns:
        Fraction: The count, which equals rstirling2(n, k, r).

    Raises:
        EnumerationLimitError: If n + r exceeds the enumeration guard.
    """
    n = require_nat(n, "n")
    k = require_nat(k, "k")
    r = require_nat(r, "r")
    _check_guard(n, r)
    if k > n:
        return Fraction(0)
    return Fraction(partition_oracle_row(n, r)[k])

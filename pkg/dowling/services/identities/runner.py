#!/usr/bin/env python3
"""
Identity Runner Module

Evaluates catalog identities over a parameter grid and aggregates the
verdicts into an IdentityReport. Iteration is sequential in catalog order
and grid order, so the first failure recorded for an identity is the first
one in that order and repeated runs give identical reports.
"""

import time
from fractions import Fraction
from typing import Iterable, Optional

from dowling.core.exact import ONE, RationalLike, to_rational
from dowling.core.utils import setup_logger, log_exception
from dowling.services.identities.catalog import IDENTITY_IDS, CatalogEntry, get_entry
from dowling.services.identities.models import IdentityReport, IdentitySummary, ParamGrid

# Initialize logger
logger = setup_logger(__name__)


def run_identity(entry: CatalogEntry, grid: ParamGrid, zero_to_zero: Fraction = ONE) -> IdentitySummary:
    """Evaluates one identity at every applicable grid point."""
    passes = failures = 0
    first_failure = None
    for point in entry.points(grid):
        instance = entry.check(**point, zero_to_zero=zero_to_zero)
        if instance.passed:
            passes += 1
        else:
            failures += 1
            if first_failure is None:
                first_failure = instance
                logger.warning(f"{entry.identity_id} fails at {point}: lhs={instance.lhs}, rhs={instance.rhs}")
    logger.debug(f"{entry.identity_id}: {passes} passed, {failures} failed")
    return IdentitySummary(
        identity_id=entry.identity_id,
        instances=passes + failures,
        passes=passes,
        failures=failures,
        first_failure=first_failure,
        note=entry.note,
    )


@log_exception(logger)
def run_grid(grid: ParamGrid, identity_ids: Optional[Iterable[str]] = None,
             zero_to_zero: RationalLike = ONE, timing: bool = False) -> IdentityReport:
    """
    Runs the requested identities over the grid.

    Args:
        grid (ParamGrid): Parameter ranges.
        identity_ids: Ids to run, in order; None runs the whole catalog and
            an empty list produces an empty report.
        zero_to_zero: Value of 0^0 in the right sides; 1 unless running the
            negative control.
        timing (bool): Record wall time in the report.

    Returns:
        IdentityReport: Per-identity counts and first failures.

    Raises:
        UnknownIdentityError: If an id is not in the catalog.
    """
    ids = IDENTITY_IDS if identity_ids is None else tuple(identity_ids)
    entries = [get_entry(identity_id) for identity_id in ids]
    zero_to_zero = to_rational(zero_to_zero)

    started = time.perf_counter()
    summaries = [run_identity(entry, grid, zero_to_zero) for entry in entries]
    elapsed = time.perf_counter() - started

    report = IdentityReport(
        summaries=summaries,
        zero_to_zero=zero_to_zero,
        wall_time=round(elapsed, 3) if timing else None,
    )
    logger.info(
        f"Identity run finished: {report.instances} instances, "
        f"{report.passes} passed, {report.failures} failed in {elapsed:.2f}s"
    )
    return report

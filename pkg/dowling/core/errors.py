#!/usr/bin/env python3
"""
Error Types

Exceptions shared by every layer. Verification failures are never raised;
they are reported as data by the identity suite.
"""


class DowlingError(Exception):
    """Root of all errors raised by this package."""


class PreconditionError(DowlingError, ValueError):
    """An operation was called outside the domain it is defined on."""


class EnumerationLimitError(PreconditionError):
    """The set-partition oracle was asked for a set larger than its guard."""


class SeriesExpansionError(DowlingError, ArithmeticError):
    """A rational function could not be expanded at t = 0."""


class UnknownIdentityError(DowlingError, LookupError):
    """No catalog entry exists under the requested identity id."""


class GridConfigError(DowlingError):
    """The grid configuration file is missing or invalid."""

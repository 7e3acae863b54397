#!/usr/bin/env python3
"""
Alias Module

Other number families that coincide with W_{m,r}(n,k) under a change of
parameters:
- (r, beta)-Stirling numbers:      W_{beta, r}
- Rucinski-Voigt numbers S^n_k(a) with a = (a, a+r, a+2r, ...): W_{r, a}
- noncentral Whitney numbers:       W_{m, -a}

Besides the mapping, each family's own defining expansion can be evaluated
with the numbers taken from W, which checks the mapping independently.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from dowling.core.errors import PreconditionError
from dowling.core.exact import (
    ZERO,
    RationalLike,
    binomial_general,
    falling_factorial,
    power,
    require_nat,
    to_rational,
)
from dowling.core.utils import setup_logger, log_exception
from dowling.services.triangles.whitney import WhitneyParams, whitney_number

# Initialize logger
logger = setup_logger(__name__)


class AliasFamily(str, Enum):
    R_BETA_STIRLING = "r-beta-stirling"
    RUCINSKI_VOIGT = "rucinski-voigt"
    NONCENTRAL_WHITNEY = "noncentral-whitney"


# Parameter names each family is stated with
_FAMILY_PARAMETERS: Dict[AliasFamily, Tuple[str, str]] = {
    AliasFamily.R_BETA_STIRLING: ("r", "beta"),
    AliasFamily.RUCINSKI_VOIGT: ("a", "r"),
    AliasFamily.NONCENTRAL_WHITNEY: ("m", "a"),
}


@dataclass(frozen=True)
class AliasKind:
    """A family member: the family and its own parameters by name."""
    family: AliasFamily
    parameters: Dict[str, Fraction] = field(default_factory=dict, hash=False)

    @classmethod
    def of(cls, family, **parameters: RationalLike) -> "AliasKind":
        family = AliasFamily(family)
        expected = set(_FAMILY_PARAMETERS[family])
        if set(parameters) != expected:
            raise PreconditionError(
                f"{family.value} takes parameters {sorted(expected)}, got {sorted(parameters)}"
            )
        return cls(family, {name: to_rational(value) for name, value in parameters.items()})


@log_exception(logger)
def alias_params(alias: AliasKind) -> WhitneyParams:
    """
    Returns the (m, r) pair under which the aliased number equals W_{m,r}(n,k).

    Raises:
        PreconditionError: If the mapped m-slot is zero.
    """
    p = alias.parameters
    if alias.family is AliasFamily.R_BETA_STIRLING:
        m, r = p["beta"], p["r"]
    elif alias.family is AliasFamily.RUCINSKI_VOIGT:
        m, r = p["r"], p["a"]
    else:
        m, r = p["m"], -p["a"]
    if m == 0:
        raise PreconditionError(f"{alias.family.value} maps to a zero m-slot")
    return WhitneyParams(m, r)


def _r_beta_basis(alias: AliasKind, k: int, t: Fraction) -> Fraction:
    # C((t - r)/beta, k) beta^k k!
    r, beta = alias.parameters["r"], alias.parameters["beta"]
    return binomial_general((t - r) / beta, k) * beta ** k * math.factorial(k)


def _rucinski_voigt_basis(alias: AliasKind, k: int, t: Fraction) -> Fraction:
    # prod_{i<k} (t - (a + i r))
    a, r = alias.parameters["a"], alias.parameters["r"]
    return math.prod((t - a - i * r for i in range(k)), start=Fraction(1))


def _noncentral_by_differences(m: Fraction, a: Fraction, n: int, k: int) -> Fraction:
    # (1/(m^k k!)) [Delta^k (mt - a)^n] at t = 0
    difference = sum(
        ((-1) ** (k - j) * math.comb(k, j) * power(m * j - a, n) for j in range(k + 1)),
        ZERO,
    )
    return difference / (m ** k * math.factorial(k))


def alias_expansion(alias: AliasKind, n: int, t: RationalLike) -> Tuple[Fraction, Fraction]:
    """
    Evaluates the aliased family's defining relation at t, with the
    family's numbers supplied by W at the mapped parameters.

    Returns:
        tuple: (left side, right side); they agree when the mapping is right.
    """
    n = require_nat(n, "n")
    t = to_rational(t)
    params = alias_params(alias)
    row = [whitney_number(params, n, k) for k in range(n + 1)]

    if alias.family is AliasFamily.NONCENTRAL_WHITNEY:
        # Both sides on the falling-factorial basis: the family's own k-th differences vs the table row
        m, a = alias.parameters["m"], alias.parameters["a"]
        lhs = sum((_noncentral_by_differences(m, a, n, k) * falling_factorial(t, k) for k in range(n + 1)), ZERO)
        rhs = sum((row[k] * falling_factorial(t, k) for k in range(n + 1)), ZERO)
        return lhs, rhs

    basis = _r_beta_basis if alias.family is AliasFamily.R_BETA_STIRLING else _rucinski_voigt_basis
    lhs = power(t, n)
    rhs = sum((row[k] * basis(alias, k, t) for k in range(n + 1)), ZERO)
    return lhs, rhs

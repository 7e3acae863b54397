from fractions import Fraction

import pytest

from dowling.core.errors import PreconditionError
from dowling.services.triangles.aliases import AliasFamily, AliasKind, alias_expansion, alias_params
from dowling.services.triangles.whitney import WhitneyParams


@pytest.mark.parametrize("family, parameters, expected", [
    ("r-beta-stirling", {"r": 1, "beta": 2}, WhitneyParams(2, 1)),
    ("rucinski-voigt", {"a": 3, "r": 2}, WhitneyParams(2, 3)),
    ("noncentral-whitney", {"m": 2, "a": 1}, WhitneyParams(2, -1)),
])
def test_alias_params(family, parameters, expected):
    assert alias_params(AliasKind.of(family, **parameters)) == expected


def test_zero_m_slot_rejected():
    with pytest.raises(PreconditionError):
        alias_params(AliasKind.of(AliasFamily.R_BETA_STIRLING, r=1, beta=0))


def test_wrong_parameter_names_rejected():
    with pytest.raises(PreconditionError):
        AliasKind.of("rucinski-voigt", m=1, r=2)


@pytest.mark.parametrize("alias", [
    AliasKind.of("r-beta-stirling", r=1, beta=2),
    AliasKind.of("r-beta-stirling", r="1/2", beta=3),
    AliasKind.of("rucinski-voigt", a=3, r=2),
    AliasKind.of("rucinski-voigt", a="-1/2", r="1/3"),
    AliasKind.of("noncentral-whitney", m=2, a=1),
    AliasKind.of("noncentral-whitney", m="1/2", a=3),
], ids=lambda a: a.family.value)
def test_defining_expansions(alias):
    for n in range(7):
        for t in (Fraction(0), Fraction(1, 3), Fraction(5), Fraction(-7, 2)):
            lhs, rhs = alias_expansion(alias, n, t)
            assert lhs == rhs

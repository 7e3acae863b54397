from fractions import Fraction

import pytest

from dowling.services.polynomials.dowling_poly import dowling_univariate, dowling_value
from dowling.services.polynomials.limits import UPoly, falling_ratio, limit_reduction, substituted_dowling
from dowling.services.triangles.whitney import WhitneyParams
from tests.conftest import GRID_PARAMS, GRID_Y


def test_falling_ratio():
    assert falling_ratio(0, 0).coeffs == (1,)
    assert falling_ratio(0, 3).coeffs == (1, -3, 2)
    assert falling_ratio(2, 1).coeffs == (1, -2)


@pytest.mark.parametrize("m, r, coeffs", [(1, 0, (2, -1)), (2, 1, (6, -1))])
def test_limit_reduction_examples(m, r, coeffs):
    assert limit_reduction(WhitneyParams(m, r), 2, 1).coeffs == coeffs


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_limit_is_univariate_value(params):
    for n in range(7):
        for y in GRID_Y:
            assert limit_reduction(params, n, y).constant_term == dowling_univariate(params, n, y)


def test_substituted_dowling_matches_large_x():
    # At u = 1/x the reduced polynomial is the exact value D(n; x - s, y/x)
    params = WhitneyParams(2, 1)
    x, s, y = Fraction(7), 2, Fraction(3)
    reduced = substituted_dowling(params, 3, s, y)
    at_u = sum(c * (1 / x) ** i for i, c in enumerate(reduced.coeffs))
    assert at_u == dowling_value(params, 3, x - s, y / x)


def test_upoly_equality_and_degree():
    a = UPoly.constant(2)
    assert a == UPoly.constant(Fraction(2))
    assert a.degree == 0
    assert UPoly.constant(0).coeffs == ()
    assert UPoly.constant(0).constant_term == 0
    assert (falling_ratio(0, 3).scale(2)).to_json() == ["2", "-6", "4"]

from fractions import Fraction

import pytest

from dowling.core.errors import PreconditionError
from dowling.services.series.generating_functions import (
    SeriesKind,
    build_series,
    direct_values,
    dowling_egf,
    dowling_egf_two_variable,
    dowling_ogf_function,
    egf_check,
    egf_two_variable_check,
    ogf_hypergeometric,
    ogf_hypergeometric_direct,
    ogf_partial_fractions,
    whitney_ogf,
)
from dowling.services.series.rational_function import RationalFunction
from dowling.services.triangles.whitney import WhitneyParams, whitney_number
from tests.conftest import GRID_PARAMS, GRID_Y

P21 = WhitneyParams(2, 1)


def test_exponential_example():
    assert dowling_egf(P21, 2, Fraction(1), 4).coefficient(2) == Fraction(11, 2)


def test_two_variable_example():
    series = dowling_egf_two_variable(P21, 2, 1, 2, 2)
    assert series.coefficient(1, 1) == 11
    assert series.coefficient(0, 2) == Fraction(11, 2)


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_exponential_generating_function(params):
    for x in range(4):
        for y in GRID_Y:
            assert egf_check(params, x, y, 8).holds


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
@pytest.mark.parametrize("x", range(6))
def test_exponential_generating_function_through_order_twelve(params, x):
    for y in GRID_Y:
        verdict = egf_check(params, x, y, 12)
        assert verdict.holds, y


@pytest.mark.parametrize("params", [P21, WhitneyParams("1/2", "1/2"), WhitneyParams(3, 0)])
def test_two_variable_generating_function(params):
    for x in range(3):
        assert egf_two_variable_check(params, x, "1/2", 3, 4).holds


def test_ordinary_example():
    assert ogf_hypergeometric(P21, 1, 1, 3).coeffs == (1, 2, 5, 14)


def test_ordinary_closed_form():
    # (1 - 2t) / ((1 - t)(1 - 3t))
    expected = RationalFunction.from_coeffs([1, -2], [1, -4, 3])
    assert dowling_ogf_function(P21, 1, Fraction(1)) == expected


def test_hypergeometric_route_refuses_y_equal_m():
    with pytest.raises(PreconditionError):
        ogf_hypergeometric(P21, 1, 2, 3)


def test_partial_fractions_example():
    assert ogf_partial_fractions(P21, 1, 2, 2).coeffs == (1, 3, 9)


def test_direct_route_covers_y_equal_m():
    for x in range(4):
        assert ogf_hypergeometric_direct(P21, x, 2, 6) == ogf_partial_fractions(P21, x, 2, 6)


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_ordinary_routes_agree(params):
    for x in range(3):
        for y in GRID_Y:
            y = Fraction(y)
            expected = direct_values(params, x, y, 6)
            assert ogf_partial_fractions(params, x, y, 6) == expected
            assert ogf_hypergeometric_direct(params, x, y, 6) == expected
            if y != params.m:
                assert ogf_hypergeometric(params, x, y, 6) == expected


def test_whitney_ordinary_example():
    assert whitney_ogf(P21, 1, 3).coeffs == (0, 1, 4, 13)


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_whitney_ordinary_columns(params):
    for k in range(4):
        series = whitney_ogf(params, k, 8)
        assert series.coeffs == tuple(whitney_number(params, n, k) for n in range(9))


@pytest.mark.parametrize("kind, kwargs, expected", [
    ("egf", {"x": 2, "y": 1}, (1, 3, Fraction(11, 2))),
    ("ogf-2f1", {"x": 1, "y": 1}, (1, 2, 5)),
    ("ogf-2f1-direct", {"x": 1, "y": 2}, (1, 3, 9)),
    ("ogf-pf", {"x": 1, "y": 2}, (1, 3, 9)),
    ("whitney-ogf", {"k": 1}, (0, 1, 4)),
])
def test_build_series(kind, kwargs, expected):
    assert build_series(kind, P21, 2, **kwargs).coeffs == expected


def test_build_series_unknown_kind():
    with pytest.raises(ValueError):
        build_series("lgf", P21, 2)
    assert SeriesKind("ogf-pf") is SeriesKind.OGF_PF

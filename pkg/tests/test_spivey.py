from fractions import Fraction

import pytest

from dowling.services.identities.spivey import (
    BELL_PARAMS,
    check_limit_form,
    check_spivey_first,
    check_spivey_second,
    limit_first_form,
    limit_second_form,
    literal_univariate,
    second_form_base,
    spivey_sum,
)
from dowling.services.polynomials.dowling_poly import dowling_number, dowling_univariate
from dowling.services.triangles.whitney import WhitneyParams
from tests.conftest import GRID_PARAMS

P21 = WhitneyParams(2, 1)
SPLITS = [(l, n) for l in range(4) for n in range(4 - l)]


def test_first_form_example():
    instance = check_spivey_first(P21, 1, 1, 2, 1)
    assert instance.lhs == 11
    assert instance.passed
    assert instance.identity_id == "spivey-first-bivariate"
    assert instance.bindings == {"m": 2, "r": 1, "l": 1, "n": 1, "x": 2, "y": 1}


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_both_forms_hold(params):
    for l, n in SPLITS:
        for x, y in ((0, Fraction(1)), (2, Fraction(1, 2)), (3, Fraction(3))):
            assert check_spivey_first(params, l, n, x, y).passed
            assert check_spivey_second(params, l, n, x, y).passed
        assert check_spivey_first(params, l, n, mode="numbers").passed
        assert check_spivey_second(params, l, n, mode="numbers").passed


def test_non_integer_x():
    assert check_spivey_first(P21, 2, 2, "1/3", "-2").passed
    assert check_spivey_second(WhitneyParams("1/2", 2), 2, 1, "7/2", 3).passed


def test_second_form_needs_the_power_of_m():
    # m = 2, r = 0, l = 0, n = 1: without m^i the inner value is B_1(1/2) = 1/2
    params = WhitneyParams(2, 0)
    without = spivey_sum(params, 0, 1, second_form_base(params),
                         lambda i, k: literal_univariate(BELL_PARAMS, i, 1 / params.m),
                         lambda k: Fraction(1))
    assert without == Fraction(1, 2)
    assert dowling_number(params, 1) == 1
    assert check_spivey_second(params, 0, 1, mode="numbers").passed


def test_zero_power_breaks_the_first_form():
    instance = check_spivey_first(P21, 0, 1, mode="numbers", zero_to_zero=0)
    assert instance.lhs == 2
    assert instance.rhs == 0
    assert not instance.passed


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_limit_forms(params):
    for l, n in SPLITS:
        for y in (Fraction(1, 2), Fraction(2)):
            assert check_limit_form(params, l, n, y).passed
            assert check_limit_form(params, l, n, y, second=True).passed


def test_limit_form_polynomials():
    expected = dowling_univariate(P21, 3, 1)
    first = limit_first_form(P21, 1, 2, 1)
    second = limit_second_form(P21, 1, 2, 1)
    assert first.constant_term == expected
    assert second.constant_term == expected
    assert first.degree >= 1
    assert check_limit_form(P21, 1, 2, 1, second=True).identity_id == "limit-second-form"

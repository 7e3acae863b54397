from fractions import Fraction

import pytest

from dowling.core.errors import PreconditionError
from dowling.services.series.generating_functions import whitney_egf_check
from dowling.services.triangles.whitney import (
    WhitneyParams,
    horizontal_gf_holds,
    newton_row,
    rstirling2,
    shared_table,
    stirling2,
    vertical_recurrence_row,
    whitney_explicit,
    whitney_newton,
    whitney_number,
    whitney_table,
)
from tests.conftest import GRID_PARAMS


def test_rejects_zero_m():
    with pytest.raises(PreconditionError):
        WhitneyParams(0, 1)


@pytest.mark.parametrize("m, r, row3", [
    (1, 0, (0, 1, 3, 1)),
    (2, 1, (1, 13, 9, 1)),
])
def test_table_rows(m, r, row3):
    assert whitney_table(WhitneyParams(m, r), 3).row(3) == row3


def test_table_seed():
    table = whitney_table(WhitneyParams("1/2", 3), 0)
    assert table.rows == ((1,),)
    assert table.entry(0, 4) == 0


def test_table_beyond_max_raises():
    with pytest.raises(PreconditionError):
        whitney_table(WhitneyParams(1, 0), 2).row(3)


def test_extended_table_keeps_rows():
    small = whitney_table(WhitneyParams(2, 1), 3)
    bigger = small.extended(6)
    assert bigger.max_n == 6
    assert bigger.rows[:4] == small.rows
    assert small.max_n == 3


@pytest.mark.parametrize("m, r, n, k, expected", [
    (2, 1, 2, 1, 4),
    (3, 1, 5, 5, 1),
    (1, 0, 3, 2, 3),
])
def test_whitney_explicit(m, r, n, k, expected):
    assert whitney_explicit(WhitneyParams(m, r), n, k) == expected


@pytest.mark.parametrize("m, r, n, k, expected", [
    (2, 1, 2, 1, 4),
    (1, 2, 1, 0, 2),
    (3, 0, 2, 2, 1),
])
def test_whitney_newton(m, r, n, k, expected):
    assert whitney_newton(WhitneyParams(m, r), n, k) == expected


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_three_routes_agree(params):
    table = whitney_table(params, 25)
    for n in range(26):
        assert newton_row(params, n) == table.row(n)
        for k in range(n + 1):
            assert whitney_explicit(params, n, k) == table.entry(n, k)


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_horizontal_generating_function(params):
    assert all(horizontal_gf_holds(params, n) for n in range(16))


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_vertical_recurrence(params):
    shifted = params.shifted(1)
    for n in range(10):
        assert vertical_recurrence_row(params, n) == shared_table(shifted, n).row(n)


@pytest.mark.parametrize("params", GRID_PARAMS, ids=lambda p: f"m={p.m},r={p.r}")
def test_exponential_generating_function_columns(params):
    for k in range(5):
        assert whitney_egf_check(params, k, 12).holds


def test_diagonal_and_corner():
    params = WhitneyParams(3, 2)
    for n in range(8):
        assert whitney_number(params, n, n) == 1
        assert whitney_number(params, n, 0) == Fraction(2) ** n


def test_nonnegative_integers_for_integer_params():
    table = whitney_table(WhitneyParams(3, 2), 10)
    assert all(v >= 0 and v.denominator == 1 for _, _, v in table.entries())


def test_shared_table_grows():
    params = WhitneyParams(5, 7)
    assert shared_table(params, 3).max_n >= 3
    grown = shared_table(params, 40)
    assert grown.max_n >= 40
    assert grown.entry(40, 40) == 1


@pytest.mark.parametrize("n, k, r, expected", [(2, 1, 1, 3), (4, 4, 2, 1), (3, 2, 0, 3)])
def test_rstirling2(n, k, r, expected):
    assert rstirling2(n, k, r) == expected


def test_stirling2():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, 0) == 0 for n in range(1, 6))

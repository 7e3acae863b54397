from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dowling.core.errors import PreconditionError, SeriesExpansionError
from dowling.services.series.bivariate import BiSeries
from dowling.services.series.truncated import TruncatedSeries, series_arith

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
series = st.builds(
    lambda coeffs: TruncatedSeries.from_coeffs(coeffs, 4),
    st.lists(rationals, min_size=5, max_size=5),
)


def test_constructors():
    assert TruncatedSeries.exp_linear(1, 3).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert TruncatedSeries.geometric(2, 3).coeffs == (1, 2, 4, 8)
    assert TruncatedSeries.from_coeffs([1, 2], 3).coeffs == (1, 2, 0, 0)
    assert TruncatedSeries.from_coeffs([1, 2, 3, 4, 5], 2).coeffs == (1, 2, 3)


def test_coefficient_count_is_checked():
    with pytest.raises(PreconditionError):
        TruncatedSeries(2, (Fraction(1),))


def test_coefficient_beyond_order():
    with pytest.raises(PreconditionError):
        TruncatedSeries.geometric(1, 2).coefficient(3)


def test_mixed_orders_truncate_to_smaller():
    total = TruncatedSeries.geometric(1, 5) + TruncatedSeries.geometric(1, 2)
    assert total.order == 2
    assert total.coeffs == (2, 2, 2)


def test_inverse_of_geometric():
    one_minus_t = TruncatedSeries.from_coeffs([1, -1], 6)
    assert (one_minus_t * TruncatedSeries.geometric(1, 6)).coeffs == (1, 0, 0, 0, 0, 0, 0)
    assert (TruncatedSeries.constant(1, 6) / one_minus_t).coeffs == TruncatedSeries.geometric(1, 6).coeffs


def test_division_needs_nonzero_constant_term():
    with pytest.raises(SeriesExpansionError):
        TruncatedSeries.constant(1, 3) / TruncatedSeries.from_coeffs([0, 1], 3)


def test_exponential_law():
    left = TruncatedSeries.exp_linear(2, 8) * TruncatedSeries.exp_linear(Fraction(-1, 3), 8)
    assert left == TruncatedSeries.exp_linear(Fraction(5, 3), 8)


def test_series_arith():
    s = TruncatedSeries.geometric(1, 4)
    assert series_arith("add", s, s).coeffs == (2, 2, 2, 2, 2)
    assert series_arith("mul", s, s).coeffs == (1, 2, 3, 4, 5)
    assert series_arith("int-pow", s, 0).coeffs == (1, 0, 0, 0, 0)
    assert series_arith("int-pow", s, 3) == s * s * s
    assert series_arith("exp-linear", 3, 2).coeffs == (1, 3, Fraction(9, 2))
    with pytest.raises(ValueError):
        series_arith("log", s)


def test_to_json():
    assert TruncatedSeries.exp_linear(1, 2).to_json() == ["1", "1", "1/2"]


@given(series, series)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(series, series, series)
def test_multiplication_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_bivariate_exponential():
    # e^{u+v}: coefficient of u^a v^b is 1/(a! b!)
    s = BiSeries.exp_linear_sum(1, 2, 3)
    assert s.coefficient(2, 3) == Fraction(1, 12)
    assert (s * s).coefficient(1, 1) == 4


def test_bivariate_shape_is_checked():
    with pytest.raises(PreconditionError):
        BiSeries((1, 1), ((Fraction(1),),))

import pytest

from dowling.core.errors import PreconditionError
from dowling.services.polynomials.specializations import (
    bell_bivariate,
    bell_number,
    bell_poly,
    rbell_bivariate,
    rbell_number,
    rbell_poly,
    Specialization,
    _VARIANTS,
    specialize,
)


def test_bell_numbers():
    assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_rbell_numbers_shift_bell():
    # B_{n,1} = B_{n+1}
    assert [rbell_number(n, 1) for n in range(6)] == [bell_number(n + 1) for n in range(6)]
    assert [rbell_number(n, 2) for n in range(4)] == [1, 3, 10, 37]


def test_polynomials():
    assert bell_poly(3, 2) == 22
    assert rbell_poly(1, 2, 5) == 7
    assert bell_bivariate(2, 3, 1) == 9
    assert rbell_bivariate(2, 1, 1, 1) == 4


@pytest.mark.parametrize("variant, args, expected", [
    ("bell-number", {"n": 4}, 15),
    ("bell-poly", {"n": 3, "x": 2}, 22),
    ("rbell-number", {"n": 2, "r": 2}, 10),
    ("dowling-univariate", {"m": 2, "r": 1, "n": 2, "x": 1}, 6),
])
def test_specialize(variant, args, expected):
    assert specialize(variant, **args) == expected


def test_specialize_rejects_bad_calls():
    with pytest.raises(PreconditionError):
        specialize("catalan", n=3)
    with pytest.raises(PreconditionError):
        specialize("bell-poly", n=1)
    with pytest.raises(PreconditionError):
        rbell_number(2, -1)


def test_specialize_rejects_unexpected_argument():
    with pytest.raises(PreconditionError):
        specialize("bell-number", n=2, x=1)


def test_specialize_passes_internal_type_errors_through(monkeypatch):
    def broken(n):
        raise TypeError("unsupported operand")

    monkeypatch.setitem(_VARIANTS, Specialization.BELL_NUMBER, broken)
    with pytest.raises(TypeError):
        specialize("bell-number", n=2)

import pytest

from dowling.core.errors import EnumerationLimitError
from dowling.services.triangles.partition_oracle import (
    partition_oracle,
    partition_oracle_row,
    restricted_growth_strings,
)
from dowling.services.triangles.whitney import rstirling2


@pytest.mark.parametrize("n, k, r, expected", [
    (3, 1, 0, 1),
    (3, 2, 0, 3),
    (2, 1, 1, 3),
    (0, 0, 0, 1),
    (2, 3, 0, 0),
])
def test_partition_counts(n, k, r, expected):
    assert partition_oracle(n, k, r) == expected


def test_restricted_growth_strings():
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2),
    ]
    assert list(restricted_growth_strings(2, (0, 1))) == [(0, 1)]
    assert len(list(restricted_growth_strings(5))) == 52


@pytest.mark.parametrize("r", [0, 1, 2])
def test_oracle_matches_r_stirling(r):
    for n in range(0, 11 - r):
        row = partition_oracle_row(n, r)
        assert row == tuple(rstirling2(n, k, r) for k in range(n + 1))


def test_guard():
    with pytest.raises(EnumerationLimitError):
        partition_oracle(10, 3, 3)

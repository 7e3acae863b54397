import pytest

from dowling.services.identities.models import ParamGrid
from dowling.services.triangles.whitney import WhitneyParams

GRID_M = ["1", "2", "3", "1/2"]
GRID_R = ["0", "1", "2", "1/2"]
GRID_Y = ["1/2", "1", "2", "3"]

GRID_PARAMS = [WhitneyParams(m, r) for m in GRID_M for r in GRID_R]


@pytest.fixture
def small_grid():
    return ParamGrid(
        m_list=[1, 2, "1/2"],
        r_list=[0, 1, "1/2"],
        sum_budget=3,
        x_max=2,
        y_list=["1/2", 2],
        series_order=4,
    )

from fractions import Fraction

import pytest
from pydantic import ValidationError

from dowling.services.identities.models import (
    IdentityInstance,
    IdentityReport,
    IdentitySummary,
    ParamGrid,
    Verdict,
)


def test_instance_verdict_and_serialization():
    instance = IdentityInstance(identity_id="bell-rec", bindings={"n": 2}, lhs="5", rhs=Fraction(5))
    assert instance.verdict is Verdict.PASS
    assert instance.passed
    dumped = instance.model_dump(mode="json")
    assert dumped == {"identity_id": "bell-rec", "bindings": {"n": "2"}, "lhs": "5", "rhs": "5", "verdict": "pass"}

    failed = IdentityInstance(identity_id="bell-rec", lhs=1, rhs="1/2")
    assert failed.verdict is Verdict.FAIL
    assert failed.model_dump(mode="json")["rhs"] == "1/2"


def test_summary_counts_must_add_up():
    with pytest.raises(ValidationError):
        IdentitySummary(identity_id="x", instances=3, passes=1, failures=1)


def test_report_totals():
    report = IdentityReport(summaries=[
        IdentitySummary(identity_id="a", instances=3, passes=3, failures=0),
        IdentitySummary(identity_id="b", instances=2, passes=1, failures=1),
    ])
    assert (report.instances, report.passes, report.failures) == (5, 4, 1)
    assert not report.all_pass
    assert report.summary("b").failures == 1
    with pytest.raises(KeyError):
        report.summary("c")
    dumped = report.model_dump(mode="json", exclude_none=True)
    assert dumped["zero_to_zero"] == "1"
    assert dumped["failures"] == 1
    assert "wall_time" not in dumped


def test_empty_report_passes():
    assert IdentityReport().all_pass


@pytest.mark.parametrize("overrides", [
    {"m_list": []},
    {"m_list": [1, 0]},
    {"y_list": ["a"]},
    {"x_max": -1},
])
def test_grid_validation(overrides):
    fields = {"m_list": [1], "r_list": [0], "sum_budget": 2, "x_max": 1, "y_list": [1]}
    with pytest.raises(ValidationError):
        ParamGrid(**{**fields, **overrides})

#!/usr/bin/env python3
"""
Identity Report Models

Pydantic models for the identity suite: single instances, per-identity
summaries, the full report and the parameter grid. Rationals are validated
from ints, Fractions or "p/q" strings and serialized back to "p/q" strings,
so model_dump(mode="json") is the JSON report.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Dict, List, Optional

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    computed_field,
    field_validator,
    model_validator,
)

from dowling.core.exact import format_rational, to_rational

RationalField = Annotated[
    Fraction,
    BeforeValidator(to_rational),
    PlainSerializer(format_rational, return_type=str),
]


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class IdentityInstance(BaseModel):
    """One evaluation of one identity; the verdict is pass iff lhs == rhs exactly."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity_id: str
    bindings: Dict[str, RationalField] = Field(default_factory=dict)
    lhs: RationalField
    rhs: RationalField

    @computed_field
    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.lhs == self.rhs else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


class IdentitySummary(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity_id: str
    instances: int = 0
    passes: int = 0
    failures: int = 0
    first_failure: Optional[IdentityInstance] = None
    note: Optional[str] = None

    @model_validator(mode="after")
    def _counts_add_up(self) -> "IdentitySummary":
        if self.instances != self.passes + self.failures:
            raise ValueError("instances must equal passes + failures")
        return self


class IdentityReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    summaries: List[IdentitySummary] = Field(default_factory=list)
    zero_to_zero: RationalField = Fraction(1)
    wall_time: Optional[float] = None

    @computed_field
    @property
    def instances(self) -> int:
        return sum(s.instances for s in self.summaries)

    @computed_field
    @property
    def passes(self) -> int:
        return sum(s.passes for s in self.summaries)

    @computed_field
    @property
    def failures(self) -> int:
        return sum(s.failures for s in self.summaries)

    @property
    def all_pass(self) -> bool:
        return self.failures == 0

    def summary(self, identity_id: str) -> IdentitySummary:
        for s in self.summaries:
            if s.identity_id == identity_id:
                return s
        raise KeyError(identity_id)


class ParamGrid(BaseModel):
    """
    The parameter ranges an identity run sweeps.

    sum_budget bounds l + n (and n for single-index entries); x ranges over
    0..x_max; series_order bounds generating-function coefficients.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m_list: List[RationalField]
    r_list: List[RationalField]
    sum_budget: int = Field(ge=0)
    x_max: int = Field(ge=0)
    y_list: List[RationalField]
    series_order: int = Field(default=10, ge=0)

    @field_validator("m_list", "r_list", "y_list")
    @classmethod
    def _nonempty(cls, values: List[Fraction]) -> List[Fraction]:
        if not values:
            raise ValueError("grid lists must be nonempty")
        return values

    @field_validator("m_list")
    @classmethod
    def _m_nonzero(cls, values: List[Fraction]) -> List[Fraction]:
        if any(m == 0 for m in values):
            raise ValueError("m-list must not contain 0")
        return values

    @property
    def x_values(self) -> range:
        return range(self.x_max + 1)

    @property
    def integer_r_values(self) -> List[int]:
        """The integer r >= 0 of r-list, for the r-Bell entries."""
        return [int(r) for r in self.r_list if r.denominator == 1 and r >= 0]

    def restricted(self, m_list=None, r_list=None) -> "ParamGrid":
        """A copy with the (m, r) axes replaced."""
        return self.model_copy(update={
            "m_list": [to_rational(m) for m in m_list] if m_list is not None else self.m_list,
            "r_list": [to_rational(r) for r in r_list] if r_list is not None else self.r_list,
        })

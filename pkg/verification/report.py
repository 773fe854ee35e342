"""
Structured outcomes of identity checks.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, model_validator


class ReportMode(str, Enum):
    EXACT = "exact"
    SYMBOLIC = "symbolic"
    SAMPLED = "sampled"


class Counterexample(BaseModel):
    label: str | None = None
    point: dict[str, str] = Field(default_factory=dict)
    lhs: str
    rhs: str


class VerificationReport(BaseModel):
    identity: str
    mode: ReportMode
    passed: bool
    checked: int = Field(default=1, ge=0)
    samples: int = Field(default=0, ge=0)
    seed: int | None = None
    coeff_bound: int | None = None
    failures: int = Field(default=0, ge=0)
    counterexamples: list[Counterexample] = Field(default_factory=list)
    degree_bound: int | None = None
    failure_bound: str | None = None
    informational: bool = False
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_outcome(self) -> VerificationReport:
        if self.passed == bool(self.counterexamples):
            raise ValueError("passed must be true exactly when there are no counterexamples")
        if self.failures < len(self.counterexamples):
            raise ValueError("failures cannot be smaller than the counterexample list")
        return self

    @classmethod
    def from_failures(
        cls,
        identity: str,
        mode: ReportMode,
        failures: list[Counterexample],
        cap: int = 5,
        **kwargs: Any,
    ) -> VerificationReport:
        return cls(
            identity=identity,
            mode=mode,
            passed=not failures,
            failures=len(failures),
            counterexamples=failures[: max(cap, 1)],
            **kwargs,
        )

    @property
    def acceptable(self) -> bool:
        """Informational reports never fail a suite."""
        return self.passed or self.informational


class Finding(BaseModel):
    key: str
    summary: str
    details: dict[str, str] = Field(default_factory=dict)


class SuiteReport(BaseModel):
    suite: str
    config: dict[str, Any] = Field(default_factory=dict)
    reports: list[VerificationReport] = Field(default_factory=list)
    findings: list[Finding] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.acceptable for r in self.reports)

    def extend(self, other: SuiteReport) -> None:
        self.reports.extend(other.reports)
        self.findings.extend(other.findings)

    def to_dict(self) -> dict[str, Any]:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, model_validator


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    TEXT = "text"


class Config(BaseModel):
    cwd: Path = Field(default_factory=Path.cwd)

    seed: int = Field(default=0, ge=-(2**63), lt=2**64)
    samples: int = Field(default=100, ge=1)
    coeff_bound: int = Field(
        default=1000,
        ge=1,
        description="Largest numerator/denominator of a sampled rational",
    )
    term_budget: int = Field(
        default=2_000_000,
        ge=1,
        description="Expanded size above which identities are sampled instead of expanded",
    )
    output_format: OutputFormat = OutputFormat.JSON

    workers: int = Field(default=1, ge=1, description="Sampling pool size; 1 runs in-process")
    max_counterexamples: int = Field(default=5, ge=1)

    sigma_samples: int = Field(default=200, ge=1)
    ud_samples: int = Field(default=1000, ge=1)
    ud_bound: int = Field(default=10, ge=0)
    trop_bound: int = Field(default=5, ge=0)
    trop_n_bound: int = Field(default=3, ge=0)

    debug: bool = False

    @model_validator(mode="after")
    def validate_bounds(self) -> Config:
        if self.coeff_bound < 2 and self.samples > 1:
            raise ValueError("coeff_bound must be at least 2 when more than one sample is drawn")
        return self

    def validate(self) -> list[str]:
        errors: list[str] = []

        if not self.cwd.exists():
            errors.append(f"Working directory does not exist: {self.cwd}")

        if self.samples < 100 or self.sigma_samples < 200:
            errors.append(
                f"Sample counts below the acceptance sweep (samples={self.samples}, "
                f"sigma_samples={self.sigma_samples})"
            )

        return errors

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json")

    def report_header(self) -> dict[str, Any]:
        """The fields that determine a report; cwd and logging are left out."""
        return self.model_dump(mode="json", exclude={"cwd", "debug", "output_format", "workers"})

"""Identity certification: reports, seeded sampling and the checker."""

from verification.identity import IdentityChecker
from verification.report import (
    Counterexample,
    Finding,
    ReportMode,
    SuiteReport,
    VerificationReport,
)
from verification.sampling import positive_points, run_samples

__all__ = [
    "Counterexample",
    "Finding",
    "IdentityChecker",
    "ReportMode",
    "SuiteReport",
    "VerificationReport",
    "positive_points",
    "run_samples",
]

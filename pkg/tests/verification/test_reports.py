"""
Tests for reports, sampling and the identity checker.
"""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from ratfunc.rational import RationalFunction
from ratfunc.vartable import X_TABLE
from verification.identity import POINTWISE_MARGIN, IdentityChecker
from verification.report import (
    Counterexample,
    Finding,
    ReportMode,
    SuiteReport,
    VerificationReport,
)
from verification.sampling import integer_points, positive_points, run_samples


def _square(v: int) -> int:
    return v * v


def test_passed_requires_no_counterexamples():
    """passed is true exactly when the counterexample list is empty."""
    with pytest.raises(ValidationError):
        VerificationReport(
            identity="x",
            mode=ReportMode.EXACT,
            passed=True,
            failures=1,
            counterexamples=[Counterexample(lhs="1", rhs="2")],
        )


def test_from_failures_caps_the_list():
    """The counterexample list is capped; the failure count is not."""
    failures = [Counterexample(lhs=str(k), rhs="0") for k in range(9)]
    report = VerificationReport.from_failures("x", ReportMode.SAMPLED, failures, cap=3)
    assert not report.passed
    assert report.failures == 9
    assert len(report.counterexamples) == 3


def test_informational_failures_do_not_fail_a_suite():
    """A failing informational report keeps the suite passing."""
    failing = VerificationReport.from_failures(
        "x", ReportMode.SAMPLED, [Counterexample(lhs="1", rhs="2")], informational=True
    )
    suite = SuiteReport(suite="s", reports=[failing])
    assert suite.passed
    suite.reports.append(
        VerificationReport.from_failures("y", ReportMode.EXACT, [Counterexample(lhs="1", rhs="2")])
    )
    assert not suite.passed


def test_suite_json_is_canonical():
    """Suite JSON has sorted keys, the aggregate verdict and the findings."""
    suite = SuiteReport(
        suite="s",
        config={"seed": 1},
        reports=[VerificationReport.from_failures("x", ReportMode.EXACT, [])],
        findings=[Finding(key="k", summary="note", details={"a": "1"})],
    )
    text = suite.to_json()
    data = json.loads(text)
    assert data["passed"] is True
    assert data["findings"][0]["key"] == "k"
    assert text == json.dumps(data, indent=2, sort_keys=True) + "\n"


def test_positive_points_are_seeded_and_bounded():
    """Same seed and stream give the same points; coordinates are p/q in range."""
    first = positive_points(["a", "b"], 5, seed=3, bound=10, stream_name="s")
    second = positive_points(["a", "b"], 5, seed=3, bound=10, stream_name="s")
    other = positive_points(["a", "b"], 5, seed=3, bound=10, stream_name="t")
    assert first == second
    assert first != other
    for point in first:
        for value in point.values():
            assert value > 0
            assert value.numerator <= 10 and value.denominator <= 10


def test_integer_points_range():
    """Integer samples stay in [-bound, bound]."""
    points = integer_points(6, 50, seed=0, bound=2)
    assert len(points) == 50
    assert all(-2 <= v <= 2 for p in points for v in p)


def test_run_samples_keeps_order():
    """Results come back in item order."""
    assert run_samples(_square, [3, 1, 2]) == [9, 1, 4]


def test_certify_symbolic():
    """A true identity is certified symbolically."""
    x = RationalFunction.variables(X_TABLE)
    report = IdentityChecker().certify("distributive", x[0] * (x[1] + 1), x[0] * x[1] + x[0], X_TABLE)
    assert report.passed
    assert report.mode is ReportMode.SYMBOLIC


def test_certify_reports_false_identity():
    """A false identity yields a counterexample."""
    x = RationalFunction.variables(X_TABLE)
    report = IdentityChecker().certify("wrong", x[0] + x[1], x[0] * x[1], X_TABLE)
    assert not report.passed
    assert report.counterexamples[0].label == "wrong"


def test_forced_sampling_embeds_replay_data():
    """Sampled reports carry seed, bound and a failure bound."""
    x = RationalFunction.variables(X_TABLE)
    checker = IdentityChecker(samples=6, seed=11, coeff_bound=50, force_mode=ReportMode.SAMPLED)
    report = checker.certify("square", (x[0] + x[1]) ** 2, x[0] ** 2 + 2 * x[0] * x[1] + x[1] ** 2, X_TABLE)
    assert report.passed
    assert report.mode is ReportMode.SAMPLED
    assert report.samples == 6
    assert report.seed == 11
    assert report.coeff_bound == 50
    assert report.failure_bound is not None


def test_check_points_collects_failures():
    """Pointwise checks report the failing points."""
    checker = IdentityChecker(samples=4, seed=1, coeff_bound=5)
    points = [{"x": Fraction(1)}, {"x": Fraction(2)}]
    report = checker.check_points("is_one", _is_one, points)
    assert report.failures == 1
    assert report.counterexamples[0].point == {"x": "2"}


def test_pointwise_reports_state_their_margin():
    """Pointwise reports carry the sampling bound when a degree is known, else a marker."""
    checker = IdentityChecker(samples=2, seed=1, coeff_bound=5)
    points = [{"x": Fraction(1)}, {"x": Fraction(1)}]
    plain = checker.check_points("is_one", _is_one, points)
    assert plain.passed
    assert plain.failure_bound == POINTWISE_MARGIN
    assert plain.degree_bound is None
    bounded = checker.check_points("is_one", _is_one, points, degree_bound=3)
    assert bounded.degree_bound == 3
    assert bounded.failure_bound == "3.600e-01"


def _is_one(point):
    return point["x"] == 1, point["x"], 1

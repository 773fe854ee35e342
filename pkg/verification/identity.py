"""
Symbolic-or-sampled identity certification.

An identity lhs == rhs is certified symbolically when the expanded
cross-multiplication fits the term budget. Otherwise both sides are evaluated
exactly at seeded positive rational points; the report carries the degree
bound of the difference and the Schwartz-Zippel style failure bound
(degree / coeff_bound) ** samples.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Any

from ratfunc.factored import FactoredRational
from ratfunc.vartable import VarTable
from utils.errors import EvaluationError
from verification.report import Counterexample, ReportMode, VerificationReport
from verification.sampling import format_point, positive_points, run_samples

logger = logging.getLogger(__name__)

POINTWISE_MARGIN = "pointwise: no degree bound, agreement is evidence only"

PointCheck = Callable[[dict[str, Fraction]], tuple[bool, Any, Any]]


def _compare_at(
    lhs: FactoredRational, rhs: FactoredRational, point: dict[str, Fraction]
) -> tuple[bool, Any, Any]:
    try:
        left = lhs.evaluate(point)
        right = rhs.evaluate(point)
    except EvaluationError as e:
        return False, f"error: {e.message}", "-"
    return left == right, left, right


def _truncate(text: str, limit: int = 400) -> str:
    return text if len(text) <= limit else text[:limit] + f"... ({len(text)} chars)"


def failure_bound(degree: int, bound: int, samples: int) -> str:
    if samples == 0:
        return "1"
    ratio = Fraction(min(degree, bound), bound)
    if ratio == 0:
        return "0"
    value = ratio**samples
    return f"{float(value):.3e}" if value > Fraction(1, 10**300) else "<1e-300"


@dataclass
class IdentityChecker:
    samples: int = 100
    seed: int = 0
    coeff_bound: int = 1000
    term_budget: int = 2_000_000
    workers: int = 1
    max_counterexamples: int = 5
    force_mode: ReportMode | None = None

    @classmethod
    def from_config(cls, config: Any, force_mode: ReportMode | None = None) -> IdentityChecker:
        return cls(
            samples=config.samples,
            seed=config.seed,
            coeff_bound=config.coeff_bound,
            term_budget=config.term_budget,
            workers=config.workers,
            max_counterexamples=config.max_counterexamples,
            force_mode=force_mode,
        )

    def with_samples(self, samples: int) -> IdentityChecker:
        return IdentityChecker(
            samples=samples,
            seed=self.seed,
            coeff_bound=self.coeff_bound,
            term_budget=self.term_budget,
            workers=self.workers,
            max_counterexamples=self.max_counterexamples,
            force_mode=self.force_mode,
        )

    def points(self, names: Sequence[str], stream_name: str, count: int | None = None):
        return positive_points(
            list(names), self.samples if count is None else count, self.seed,
            self.coeff_bound, stream_name,
        )

    # single identities

    def decide(self, lhs: Any, rhs: Any, table: VarTable) -> bool | None:
        """Symbolic verdict, or None when the budget (or the forced mode) rules it out."""
        if self.force_mode is ReportMode.SAMPLED:
            return None
        left = FactoredRational.lift(table, lhs)
        right = FactoredRational.lift(table, rhs)
        budget = None if self.force_mode is ReportMode.SYMBOLIC else self.term_budget
        return left.equals(right, budget)

    def certify(self, name: str, lhs: Any, rhs: Any, table: VarTable) -> VerificationReport:
        return self.certify_all(name, [(name, lhs, rhs)], table)

    def certify_all(
        self,
        name: str,
        identities: Sequence[tuple[str, Any, Any]],
        table: VarTable,
        variables: Sequence[str] | None = None,
    ) -> VerificationReport:
        """One report covering several identities over the same table."""
        lifted = [
            (label, FactoredRational.lift(table, lhs), FactoredRational.lift(table, rhs))
            for label, lhs, rhs in identities
        ]
        symbolic_failures: list[Counterexample] = []
        deferred = []
        for label, lhs, rhs in lifted:
            verdict = self.decide(lhs, rhs, table)
            if verdict is None:
                deferred.append((label, lhs, rhs))
            elif not verdict:
                symbolic_failures.append(
                    Counterexample(
                        label=label,
                        lhs=_truncate(str(lhs.expand())),
                        rhs=_truncate(str(rhs.expand())),
                    )
                )
            logger.debug(f"{name}: {label} -> {verdict}")

        if not deferred:
            return VerificationReport.from_failures(
                name, ReportMode.SYMBOLIC, symbolic_failures, self.max_counterexamples,
                checked=len(lifted),
            )

        names = list(variables or table.names)
        points = self.points(names, name)
        failures = list(symbolic_failures)
        degree = 0
        for label, lhs, rhs in deferred:
            degree = max(degree, (lhs / rhs).degree_bound())
            outcomes = run_samples(partial(_compare_at, lhs, rhs), points, self.workers)
            for point, (ok, left, right) in zip(points, outcomes):
                if not ok:
                    failures.append(
                        Counterexample(
                            label=label, point=format_point(point), lhs=str(left), rhs=str(right)
                        )
                    )
        return VerificationReport.from_failures(
            name,
            ReportMode.SAMPLED,
            failures,
            self.max_counterexamples,
            checked=len(lifted),
            samples=len(points),
            seed=self.seed,
            coeff_bound=self.coeff_bound,
            degree_bound=degree,
            failure_bound=failure_bound(degree, self.coeff_bound, len(points)),
            notes=[f"{len(lifted) - len(deferred)} of {len(lifted)} certified symbolically"],
        )

    # pointwise predicates

    def check_points(
        self,
        name: str,
        check: PointCheck,
        points: Sequence[dict[str, Fraction]],
        informational: bool = False,
        notes: list[str] | None = None,
        degree_bound: int | None = None,
    ) -> VerificationReport:
        """Evaluate a pointwise predicate.

        With a degree bound the report carries the sampling failure bound;
        without one it is marked as pointwise evidence.
        """
        outcomes = run_samples(check, list(points), self.workers)
        failures = [
            Counterexample(point=format_point(p), lhs=str(left), rhs=str(right))
            for p, (ok, left, right) in zip(points, outcomes)
            if not ok
        ]
        return VerificationReport.from_failures(
            name,
            ReportMode.SAMPLED,
            failures,
            self.max_counterexamples,
            checked=1,
            samples=len(points),
            seed=self.seed,
            coeff_bound=self.coeff_bound,
            informational=informational,
            degree_bound=degree_bound,
            failure_bound=(
                POINTWISE_MARGIN
                if degree_bound is None
                else failure_bound(degree_bound, self.coeff_bound, len(points))
            ),
            notes=notes or [],
        )

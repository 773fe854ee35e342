"""
Consistency of the printed Chevalley tables as integer matrices.
"""

from __future__ import annotations

import logging

import numpy as np

from g2module.basis import BASIS
from g2module.chevalley import NILPOTENCY_DEGREE, Generator, generator_matrix
from g2module.weights import INDICES, SIMPLE_ROOTS, Weight, coroot_pairing, weight_of
from verification.report import Counterexample, ReportMode, SuiteReport, VerificationReport

logger = logging.getLogger(__name__)


def _nilpotency_failures() -> list[Counterexample]:
    failures = []
    for gen in Generator:
        for i in INDICES:
            m = generator_matrix(gen, i)
            degree = NILPOTENCY_DEGREE[i]
            below = np.linalg.matrix_power(m, degree)
            top = np.linalg.matrix_power(m, degree + 1)
            if top.any():
                failures.append(
                    Counterexample(
                        label=f"{gen.value}{i}^{degree + 1}",
                        lhs=str(top.tolist()),
                        rhs="0",
                    )
                )
            if not below.any():
                failures.append(
                    Counterexample(
                        label=f"{gen.value}{i}^{degree} nonzero", lhs="0", rhs="nonzero"
                    )
                )
    return failures


def _commutator_failures() -> list[Counterexample]:
    failures = []
    for i in INDICES:
        e = generator_matrix(Generator.E, i)
        for j in INDICES:
            f = generator_matrix(Generator.F, j)
            bracket = e @ f - f @ e
            for b in BASIS:
                column = bracket[:, b.index]
                expected = np.zeros_like(column)
                if i == j:
                    expected[b.index] = coroot_pairing(i, weight_of(b))
                if not np.array_equal(column, expected):
                    failures.append(
                        Counterexample(
                            label=f"[e{i},f{j}] on {b.label}",
                            lhs=str(column.tolist()),
                            rhs=str(expected.tolist()),
                        )
                    )
    return failures


def _weight_shift_failures() -> list[Counterexample]:
    failures = []
    for gen in Generator:
        for i in INDICES:
            m = generator_matrix(gen, i)
            root = SIMPLE_ROOTS[i]
            shift = root if gen is Generator.E else -root
            for src in BASIS:
                for dst in BASIS:
                    if not m[dst.index, src.index]:
                        continue
                    expected: Weight = weight_of(src) + shift
                    if weight_of(dst) != expected:
                        failures.append(
                            Counterexample(
                                label=f"wt({gen.value}{i} {src.label})",
                                lhs=str(weight_of(dst)),
                                rhs=str(expected),
                            )
                        )
    return failures


def _entry_failures() -> list[Counterexample]:
    failures = []
    for gen in Generator:
        for i in INDICES:
            m = generator_matrix(gen, i)
            bad = sorted(set(np.unique(m).tolist()) - {0, 1, 2, 3})
            if bad:
                failures.append(
                    Counterexample(label=f"{gen.value}{i} entries", lhs=str(bad), rhs="{0,1,2,3}")
                )
    return failures


def _trace_failures() -> list[Counterexample]:
    failures = []
    for i in INDICES:
        e = generator_matrix(Generator.E, i)
        f = generator_matrix(Generator.F, i)
        trace = int(np.trace(e @ f - f @ e))
        expected = sum(coroot_pairing(i, weight_of(b)) for b in BASIS)
        if trace != expected:
            failures.append(
                Counterexample(label=f"tr [e{i},f{i}]", lhs=str(trace), rhs=str(expected))
            )
    return failures


CHECKS = {
    "module.nilpotency": _nilpotency_failures,
    "module.commutators": _commutator_failures,
    "module.weight_shifts": _weight_shift_failures,
    "module.entries": _entry_failures,
    "module.traces": _trace_failures,
}


def verify_representation(max_counterexamples: int = 5) -> VerificationReport:
    """One exact report over nilpotency, commutators, weight shifts and traces."""
    failures: list[Counterexample] = []
    for name, check in CHECKS.items():
        found = check()
        logger.debug(f"{name}: {len(found)} failures")
        failures.extend(found)
    return VerificationReport.from_failures(
        "module.representation",
        ReportMode.EXACT,
        failures,
        max_counterexamples,
        checked=len(CHECKS),
    )


def module_suite(max_counterexamples: int = 5) -> SuiteReport:
    reports = [
        VerificationReport.from_failures(name, ReportMode.EXACT, check(), max_counterexamples)
        for name, check in CHECKS.items()
    ]
    return SuiteReport(suite="module", reports=reports)

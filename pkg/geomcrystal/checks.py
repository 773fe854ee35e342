"""
Certification of the closed forms and of the geometric crystal axioms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, partial
from typing import Any

from g2module.basis import BASIS
from g2module.weights import INDICES, cartan_entry
from geomcrystal import formulas as fm
from geomcrystal.charts import W1, W2
from geomcrystal.group import symbolic_coefficients
from geomcrystal.operators import (
    GeometricCrystal,
    e0_via_sigma,
    explicit_action,
    explicit_eps,
    explicit_gamma,
)
from geomcrystal.schubert import schubert_action, schubert_eps, schubert_gamma
from geomcrystal.sigma import (
    X_NAMES,
    check_defining_equation,
    check_inverse,
    check_y5_candidates,
    sigma,
    symbolic_substitution,
)
from ratfunc.factored import FactoredRational
from ratfunc.rational import Positivity, RationalFunction
from ratfunc.substitute import substitute_factored
from ratfunc.vartable import X_TABLE, Y_TABLE
from verification.identity import IdentityChecker
from verification.report import (
    Counterexample,
    Finding,
    ReportMode,
    SuiteReport,
    VerificationReport,
)
from verification.sampling import positive_points

logger = logging.getLogger(__name__)

ONES = {n: Fraction(1) for n in X_NAMES}


# coefficients of the chart vectors


def check_lemma_coefficients(checker: IdentityChecker) -> list[VerificationReport]:
    reports = []
    for chart, prefix, table in ((W1, "X", X_TABLE), (W2, "Y", Y_TABLE)):
        computed = symbolic_coefficients(chart)
        identities = [
            (f"{prefix}{b.value}", value, fm.get_formula(f"{prefix}{b.value}").body)
            for b, value in zip(BASIS, computed)
        ]
        reports.append(checker.certify_all(f"lemma.{chart.name}", identities, table))
    return reports


# explicit forms against the general ones


def _factored_point() -> tuple[dict[str, FactoredRational], FactoredRational]:
    x = {n: FactoredRational.variable(X_TABLE, n) for n in X_NAMES}
    return x, FactoredRational.variable(X_TABLE, "c")


def check_explicit_vs_schubert(checker: IdentityChecker) -> VerificationReport:
    """e1, e2, eps1, eps2, gamma1, gamma2 against the Schubert formulas on w1."""
    x, c = _factored_point()
    identities: list[tuple[str, Any, Any]] = []
    for i in (1, 2):
        explicit = explicit_action(i, c, x)
        general = schubert_action(W1, i, c, x)
        identities += [(f"e{i}_{n}", explicit[n], general[n]) for n in X_NAMES]
        identities.append((f"eps{i}", explicit_eps(i, x), schubert_eps(W1, i, x)))
        identities.append((f"gamma{i}", explicit_gamma(i, x), schubert_gamma(W1, i, x)))
    return checker.certify_all("theorem.e12_vs_schubert", identities, X_TABLE)


def _e0_conjugation_at(point: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    c = point["c"]
    left = explicit_action(0, c, point)
    right = e0_via_sigma(c, point)
    ok = all(left[n] == right[n] for n in X_NAMES)
    return ok, str([str(left[n]) for n in X_NAMES]), str([str(right[n]) for n in X_NAMES])


def check_e0_conjugation(checker: IdentityChecker, samples: int | None = None) -> VerificationReport:
    names = X_NAMES + ("c",)
    points = checker.points(names, "theorem.e0_vs_sigma", samples)
    return checker.check_points("theorem.e0_vs_sigma", _e0_conjugation_at, points)


def check_pullbacks(checker: IdentityChecker) -> VerificationReport:
    """eps0 and gamma0 of the w2 chart pulled back along the birational map."""
    y = {n: RationalFunction.variable(Y_TABLE, n) for n in W2.coords}
    subst = symbolic_substitution()
    x, _ = _factored_point()
    identities = []
    for name, general, explicit in (
        ("eps0", schubert_eps(W2, 0, y), explicit_eps(0, x)),
        ("gamma0", schubert_gamma(W2, 0, y), explicit_gamma(0, x)),
    ):
        pulled = substitute_factored(RationalFunction.from_value(Y_TABLE, general), subst)
        identities.append((name, pulled, explicit))
    return checker.certify_all("theorem.pullbacks", identities, X_TABLE)


def check_ones_values() -> VerificationReport:
    """Values at x = 1 (and c = 2 for e0) quoted alongside the closed forms."""
    failures: list[Counterexample] = []
    y = sigma(ONES)
    expected_y = {
        "y0": Fraction(18),
        "y1": Fraction(162),
        "y2": Fraction(6),
        "y3": Fraction(4, 3),
        "y4": Fraction(3),
        "y5": Fraction(3, 2),
    }
    for n, value in expected_y.items():
        if y[n] != value:
            failures.append(Counterexample(label=f"sigma {n}", lhs=str(y[n]), rhs=str(value)))
    point = dict(ONES, c=Fraction(2))
    expected = {
        "D": 25, "E": 12, "F": 22, "G": 18, "H": 14,
        "eps0": 12, "a": 18, "M": 18, "X1": 12, "X2": 18,
    }
    for name, value in expected.items():
        got = fm.get_formula(name).evaluate(point)
        if got != value:
            failures.append(Counterexample(label=name, lhs=str(got), rhs=str(value)))
    moved = explicit_action(0, Fraction(2), ONES)
    conj = e0_via_sigma(Fraction(2), ONES)
    e0_expected = (
        Fraction(25, 24), Fraction(11, 12), Fraction(3, 4),
        Fraction(25 * 14, 4 * 12 * 22), Fraction(25, 36), Fraction(25, 28),
    )
    for n, value in zip(X_NAMES, e0_expected):
        for label, got in (("explicit", moved[n]), ("conjugated", conj[n])):
            if got != value:
                failures.append(Counterexample(label=f"e0 {label} {n}", lhs=str(got), rhs=str(value)))
    return VerificationReport.from_failures(
        "theorem.values_at_ones", ReportMode.EXACT, failures, checked=len(expected_y) + len(expected) + 12
    )


# geometric crystal axioms


class Convention(str, Enum):
    ACTING_ROW = "acting_row"
    ACTING_COLUMN = "acting_column"

    def exponent(self, i: int, j: int) -> int:
        """Exponent of c in gamma_j(e_i^c x) / gamma_j(x)."""
        return cartan_entry(i, j) if self is Convention.ACTING_ROW else cartan_entry(j, i)


def _gamma_law_holds(convention: Convention, i: int, j: int, point: dict[str, Fraction]) -> bool:
    c = point["c"]
    moved = explicit_action(i, c, point)
    return explicit_gamma(j, moved) == c ** convention.exponent(i, j) * explicit_gamma(j, point)


@lru_cache(maxsize=1)
def resolve_convention() -> tuple[Convention | None, dict[str, bool]]:
    """Test both readings on the asymmetric pairs and keep the one that holds."""
    points = positive_points(X_NAMES + ("c",), 4, 0, 10, "axioms.convention")
    outcome = {
        conv.value: all(
            _gamma_law_holds(conv, i, j, p) for p in points for i, j in ((1, 2), (2, 1))
        )
        for conv in Convention
    }
    passing = [conv for conv in Convention if outcome[conv.value]]
    chosen = passing[0] if len(passing) == 1 else None
    logger.info(f"Axiom index convention: {chosen.value if chosen else 'unresolved'} {outcome}")
    return chosen, outcome


def _axioms_at(convention: Convention, point: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    c = point["c"]
    bad = []
    for i in INDICES:
        moved = explicit_action(i, c, point)
        for j in INDICES:
            if explicit_gamma(j, moved) != c ** convention.exponent(i, j) * explicit_gamma(j, point):
                bad.append(f"gamma{j}(e{i})")
        if explicit_eps(i, moved) * c != explicit_eps(i, point):
            bad.append(f"eps{i}(e{i})")
    return not bad, ",".join(bad), "all axioms"


def check_axioms(checker: IdentityChecker, samples: int | None = None) -> VerificationReport:
    convention, outcome = resolve_convention()
    notes = [f"{k}: {'holds' if v else 'fails'}" for k, v in sorted(outcome.items())]
    if convention is None:
        failure = Counterexample(label="convention", lhs=str(outcome), rhs="exactly one reading holds")
        return VerificationReport.from_failures(
            "axioms.gamma_eps", ReportMode.SAMPLED, [failure], notes=notes
        )
    notes.append(f"resolved convention: {convention.value}")
    points = checker.points(X_NAMES + ("c",), "axioms.gamma_eps", samples)
    return checker.check_points(
        "axioms.gamma_eps", partial(_axioms_at, convention), points, notes=notes
    )


def _action_laws_at(point: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    c1, c2 = point["c1"], point["c2"]
    bad = []
    for i in INDICES:
        if explicit_action(i, Fraction(1), point) != {n: point[n] for n in X_NAMES}:
            bad.append(f"e{i}^1")
        twice = explicit_action(i, c1, explicit_action(i, c2, point))
        once = explicit_action(i, c1 * c2, point)
        if twice != once:
            bad.append(f"e{i}^c1 e{i}^c2")
    return not bad, ",".join(bad), "action laws"


def check_action_laws(checker: IdentityChecker, samples: int | None = None) -> VerificationReport:
    points = checker.points(X_NAMES + ("c1", "c2"), "axioms.action", samples)
    return checker.check_points("axioms.action", _action_laws_at, points)


def check_positivity() -> VerificationReport:
    failures = [
        Counterexample(label=f.name, lhs=f.is_positive().value, rhs=Positivity.VERIFIED_POSITIVE.value)
        for f in fm.FORMULAS.values()
        if f.is_positive() is not Positivity.VERIFIED_POSITIVE
    ]
    return VerificationReport.from_failures(
        "formulas.positivity", ReportMode.EXACT, failures, checked=len(fm.FORMULAS)
    )


# Verma relations


class RelationFamily(str, Enum):
    COMMUTING = "commuting"
    LENGTH3 = "length3"
    LENGTH4 = "length4"
    LENGTH6 = "length6"


class VermaVariant(str, Enum):
    PAPER = "paper"
    LITERATURE = "literature"


# (role, p, q): e_role^{c1^p c2^q}; sides read left to right as operator products
FAMILY_SIDES: dict[RelationFamily, tuple[tuple[tuple[str, int, int], ...], ...]] = {
    RelationFamily.COMMUTING: (
        (("i", 1, 0), ("j", 0, 1)),
        (("j", 0, 1), ("i", 1, 0)),
    ),
    RelationFamily.LENGTH3: (
        (("i", 1, 0), ("j", 1, 1), ("i", 0, 1)),
        (("j", 0, 1), ("i", 1, 1), ("j", 1, 0)),
    ),
    RelationFamily.LENGTH4: (
        (("i", 1, 0), ("j", 2, 1), ("i", 1, 1), ("j", 0, 1)),
        (("j", 0, 1), ("i", 1, 1), ("j", 2, 1), ("i", 1, 0)),
    ),
    RelationFamily.LENGTH6: (
        (("i", 1, 0), ("j", 3, 1), ("i", 2, 1), ("j", 3, 2), ("i", 1, 1), ("j", 0, 1)),
        (("j", 0, 1), ("i", 1, 1), ("j", 3, 2), ("i", 2, 1), ("j", 3, 1), ("i", 1, 0)),
    ),
}

VERMA_PAIRS: tuple[tuple[int, int], ...] = ((0, 2), (0, 1), (2, 1))


def family_for(a_ij: int, a_ji: int) -> RelationFamily:
    key = tuple(sorted((a_ij, a_ji)))
    families = {
        (0, 0): RelationFamily.COMMUTING,
        (-1, -1): RelationFamily.LENGTH3,
        (-2, -1): RelationFamily.LENGTH4,
        (-3, -1): RelationFamily.LENGTH6,
    }
    return families[key]


@dataclass(frozen=True)
class VermaRelation:
    i: int
    j: int
    family: RelationFamily

    @classmethod
    def for_pair(cls, pair: tuple[int, int], variant: VermaVariant | str) -> VermaRelation:
        """The default reading puts the more negative entry at a_ij; the literature reading swaps roles."""
        i, j = pair
        if cartan_entry(i, j) > cartan_entry(j, i):
            i, j = j, i
        if VermaVariant(variant) is VermaVariant.LITERATURE:
            i, j = j, i
        return cls(i, j, family_for(cartan_entry(i, j), cartan_entry(j, i)))

    def sides(self, c1: Any, c2: Any) -> tuple[list[tuple[int, Any]], list[tuple[int, Any]]]:
        index = {"i": self.i, "j": self.j}
        left, right = FAMILY_SIDES[self.family]

        def expand(side):
            return [(index[r], c1**p * c2**q) for r, p, q in side]

        return expand(left), expand(right)

    def describe(self) -> str:
        def word(side):
            return " ".join(f"e{r}^(c1^{p} c2^{q})" for r, p, q in side)

        left, right = FAMILY_SIDES[self.family]
        rename = {"i": str(self.i), "j": str(self.j)}
        left = [(rename[r], p, q) for r, p, q in left]
        right = [(rename[r], p, q) for r, p, q in right]
        return f"{word(left)} = {word(right)}"


def _verma_at(relation: VermaRelation, point: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    crystal = GeometricCrystal()
    left_steps, right_steps = relation.sides(point["c1"], point["c2"])
    left = crystal.compose(left_steps, point)
    right = crystal.compose(right_steps, point)
    ok = all(left[n] == right[n] for n in X_NAMES)
    return ok, str([str(left[n]) for n in X_NAMES]), str([str(right[n]) for n in X_NAMES])


def check_verma(
    pair: tuple[int, int],
    variant: VermaVariant | str,
    checker: IdentityChecker,
    samples: int | None = None,
) -> VerificationReport:
    variant = VermaVariant(variant)
    relation = VermaRelation.for_pair(pair, variant)
    name = f"verma.{pair[0]}{pair[1]}.{variant.value}"
    points = checker.points(X_NAMES + ("c1", "c2"), name, samples)
    informational = variant is VermaVariant.LITERATURE
    report = checker.check_points(
        name,
        partial(_verma_at, relation),
        points,
        informational=informational,
        notes=[relation.describe(), f"family: {relation.family.value}"],
    )
    logger.info(f"{name}: {'pass' if report.passed else 'fail'} over {report.samples} samples")
    return report


# suites


def lemma_suite(checker: IdentityChecker) -> SuiteReport:
    return SuiteReport(suite="lemma51", reports=check_lemma_coefficients(checker))


def sigma_suite(checker: IdentityChecker, samples: int | None = None) -> SuiteReport:
    y5_reports, finding = check_y5_candidates(checker, samples)
    reports = [check_defining_equation(checker, samples), *check_inverse(checker, samples), *y5_reports]
    return SuiteReport(suite="sigma", reports=reports, findings=[finding])


def theorem_suite(checker: IdentityChecker) -> SuiteReport:
    reports = [
        check_ones_values(),
        check_explicit_vs_schubert(checker),
        check_pullbacks(checker),
        check_e0_conjugation(checker),
        check_positivity(),
    ]
    return SuiteReport(suite="theorem", reports=reports)


def axioms_suite(checker: IdentityChecker) -> SuiteReport:
    convention, _ = resolve_convention()
    findings = []
    if convention is not None:
        findings.append(
            Finding(
                key="axioms.convention",
                summary="gamma_j(e_i^c x) = c^e gamma_j(x) with e read from the Cartan matrix",
                details={
                    "convention": convention.value,
                    "example": f"(i,j)=(1,2): e={convention.exponent(1, 2)}; (2,1): e={convention.exponent(2, 1)}",
                },
            )
        )
    reports = [check_axioms(checker), check_action_laws(checker)]
    return SuiteReport(suite="axioms", reports=reports, findings=findings)


def verma_suite(
    checker: IdentityChecker,
    pairs: tuple[tuple[int, int], ...] = VERMA_PAIRS,
    variants: tuple[VermaVariant, ...] = tuple(VermaVariant),
) -> SuiteReport:
    reports = []
    for pair in pairs:
        for variant in variants:
            if variant is VermaVariant.LITERATURE and cartan_entry(*pair) == cartan_entry(pair[1], pair[0]):
                continue
            reports.append(check_verma(pair, variant, checker))
    return SuiteReport(suite="verma", reports=reports)

"""
Tests for the crystal operators, the axioms and the Verma relations.
"""

from fractions import Fraction

import pytest

from g2module.basis import BasisVector
from geomcrystal.charts import W1, CrystalChart
from geomcrystal.checks import (
    Convention,
    RelationFamily,
    VermaRelation,
    VermaVariant,
    check_action_laws,
    check_axioms,
    check_e0_conjugation,
    check_explicit_vs_schubert,
    check_pullbacks,
    check_verma,
    resolve_convention,
)
from geomcrystal.operators import GeometricCrystal, OperatorForm, e0_via_sigma, explicit_action
from geomcrystal.schubert import schubert_action, schubert_eps, schubert_gamma
from ratfunc.vartable import X_TABLE
from utils.errors import DomainError

POINT = {"x0": Fraction(2), "x1": Fraction(1, 3), "x2": Fraction(5, 2), "x3": Fraction(3),
         "x4": Fraction(1, 2), "x5": Fraction(4)}


def test_e0_at_ones(ones):
    """e0^2 at x = 1 through the closed forms and through conjugation."""
    expected = {
        "x0": Fraction(25, 24),
        "x1": Fraction(11, 12),
        "x2": Fraction(3, 4),
        "x3": Fraction(25 * 14, 4 * 12 * 22),
        "x4": Fraction(25, 36),
        "x5": Fraction(25, 28),
    }
    assert explicit_action(0, Fraction(2), ones) == expected
    assert e0_via_sigma(Fraction(2), ones) == expected


def test_unit_parameter_is_identity():
    """e_i^1 leaves the point fixed."""
    for i in range(3):
        assert explicit_action(i, Fraction(1), POINT) == POINT


def test_general_form_agrees_with_explicit():
    """Schubert forms on w1 and the conjugated e0 match the closed forms."""
    explicit = GeometricCrystal()
    general = GeometricCrystal(OperatorForm.GENERAL)
    c = Fraction(3, 2)
    for i in range(3):
        assert general.e(i, c, POINT) == explicit.e(i, c, POINT)
        assert general.eps(i, POINT) == explicit.eps(i, POINT)
        assert general.gamma(i, POINT) == explicit.gamma(i, POINT)


def test_phi_is_eps_times_gamma():
    """phi_i = eps_i gamma_i."""
    crystal = GeometricCrystal()
    for i in range(3):
        assert crystal.phi(i, POINT) == crystal.eps(i, POINT) * crystal.gamma(i, POINT)


def test_compose_applies_rightmost_first():
    """compose([(1, a), (2, b)]) = e1^a(e2^b(x))."""
    crystal = GeometricCrystal()
    a, b = Fraction(2), Fraction(5, 3)
    assert crystal.compose([(1, a), (2, b)], POINT) == crystal.e(1, a, crystal.e(2, b, POINT))


def test_schubert_on_w1_at_ones(ones):
    """eps_1 has three terms and gamma_1 is one at x = 1."""
    assert schubert_eps(W1, 1, ones) == 3
    assert schubert_gamma(W1, 1, ones) == 1


def test_missing_letter_is_domain_error():
    """Asking for a letter outside the word fails."""
    with pytest.raises(DomainError):
        W1.require_letter(3)


def test_convention_is_acting_row():
    """gamma_j(e_i^c x) = c^{a_ij} gamma_j(x) with i the acting index."""
    convention, outcome = resolve_convention()
    assert convention is Convention.ACTING_ROW
    assert outcome == {"acting_row": True, "acting_column": False}


def test_axioms_and_action_laws(checker):
    """Sampled axiom checks pass."""
    assert check_axioms(checker).passed
    assert check_action_laws(checker).passed


def test_e0_conjugation(checker):
    """The closed-form e0 equals the conjugated Schubert e0 at sampled points."""
    assert check_e0_conjugation(checker, samples=2).passed


def test_explicit_vs_schubert_symbolic(checker):
    """e1, e2 and their structure functions agree symbolically."""
    report = check_explicit_vs_schubert(checker)
    assert report.passed
    assert report.checked == 16


def test_verma_families():
    """Families are drawn from the Cartan matrix; the literature reading swaps roles."""
    assert VermaRelation.for_pair((0, 2), VermaVariant.PAPER).family is RelationFamily.COMMUTING
    assert VermaRelation.for_pair((0, 1), VermaVariant.PAPER).family is RelationFamily.LENGTH3
    paper = VermaRelation.for_pair((2, 1), VermaVariant.PAPER)
    literature = VermaRelation.for_pair((2, 1), VermaVariant.LITERATURE)
    assert paper.family is RelationFamily.LENGTH6
    assert (paper.i, paper.j) == (2, 1)
    assert (literature.i, literature.j) == (1, 2)


@pytest.mark.parametrize("pair", [(0, 2), (0, 1), (2, 1)])
def test_verma_paper_relations_hold(checker, pair):
    """The paper reading of each Verma relation holds at sampled points."""
    report = check_verma(pair, VermaVariant.PAPER, checker, samples=2)
    assert report.passed
    assert not report.informational


def test_verma_literature_fails_but_is_informational(checker):
    """The literature reading of the length-6 relation fails on w1 without failing a suite."""
    report = check_verma((2, 1), VermaVariant.LITERATURE, checker, samples=3)
    assert report.informational
    assert not report.passed
    assert report.acceptable
    assert report.notes[1] == "family: length6"


def _compose_on(chart, steps, point):
    current = dict(point)
    for i, c in reversed(steps):
        current = schubert_action(chart, i, c, current)
    return current


W121 = CrystalChart(
    name="w121", word=(1, 2, 1), coords=("x0", "x1", "x2"), table=X_TABLE, seed=BasisVector.B1
)


@pytest.mark.parametrize(
    "c1, c2",
    [(Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(5, 3)), (Fraction(7), Fraction(2, 7))],
)
def test_length6_readings_on_short_chart(c1, c2):
    """On the word 1 2 1 the paper reading holds exactly for any parameters."""
    point = {"x0": Fraction(3), "x1": Fraction(1, 2), "x2": Fraction(5, 4)}
    left, right = VermaRelation.for_pair((2, 1), VermaVariant.PAPER).sides(c1, c2)
    assert _compose_on(W121, left, point) == _compose_on(W121, right, point)


def test_literature_reading_fails_on_short_chart():
    """The swapped reading already differs on the word 1 2 1 at x = 1, c1 = c2 = 2."""
    point = {"x0": Fraction(1), "x1": Fraction(1), "x2": Fraction(1)}
    relation = VermaRelation.for_pair((2, 1), VermaVariant.LITERATURE)
    left, right = relation.sides(Fraction(2), Fraction(2))
    moved_left = _compose_on(W121, left, point)
    moved_right = _compose_on(W121, right, point)
    assert moved_left["x0"] != moved_right["x0"]
    assert moved_left["x1"] == moved_right["x1"]


def test_pullbacks_certify(checker):
    """eps0 and gamma0 of the w2 chart pull back to the closed forms on w1."""
    report = check_pullbacks(checker)
    assert report.passed
    assert report.checked == 2

"""
Tests for the formula registry and the chart vectors.
"""

from fractions import Fraction

import pytest

from g2module.basis import BASIS
from g2module.module_vector import ModuleVector
from g2module.weights import INDICES, coroot_pairing, weight_of
from geomcrystal.charts import W1, W2
from geomcrystal.checks import check_lemma_coefficients, check_ones_values, check_positivity
from geomcrystal.formulas import (
    FORMULAS,
    X_COEFFICIENTS,
    Y_COEFFICIENTS,
    formulas_in,
    get_formula,
    tropical_targets,
)
from geomcrystal.group import apply_y, build_v, torus_act, y_matrix
from ratfunc.rational import Positivity
from utils.errors import UnknownFormulaError


def test_registry_groups():
    """Thirty coefficients, twenty-four tropical targets, seventy formulas in all."""
    assert len(formulas_in("lemma_x")) == 15
    assert len(formulas_in("lemma_y")) == 15
    assert len(tropical_targets()) == 24
    assert len(FORMULAS) == 70


def test_unknown_formula():
    """Lookups of unregistered names raise UnknownFormulaError."""
    with pytest.raises(UnknownFormulaError):
        get_formula("not_a_formula")


def test_values_at_ones(ones):
    """D..H at x = 1, c = 2 and the scalar a."""
    point = dict(ones, c=Fraction(2))
    values = {name: get_formula(name).evaluate(point) for name in ("D", "E", "F", "G", "H", "a", "eps0")}
    assert values == {"D": 25, "E": 12, "F": 22, "G": 18, "H": 14, "a": 18, "eps0": 12}


def test_gammas_at_ones(ones):
    """Every gamma_i is one at x = 1."""
    for i in range(3):
        assert get_formula(f"gamma{i}").evaluate(ones) == 1


def test_body_agrees_with_builder():
    """The expanded body evaluates like the builder."""
    point = {"x0": Fraction(2), "x1": Fraction(1, 3), "x2": Fraction(5), "x3": Fraction(3, 2),
             "x4": Fraction(7), "x5": Fraction(1, 4), "c": Fraction(3)}
    for name in ("C2", "C5", "eps1", "e0_x3"):
        formula = get_formula(name)
        assert formula.body.evaluate(point) == formula.evaluate(point)


@pytest.mark.parametrize(
    "point",
    [
        {f"x{k}": Fraction(1) for k in range(6)},
        {"x0": Fraction(3), "x1": Fraction(1, 2), "x2": Fraction(2), "x3": Fraction(5, 3),
         "x4": Fraction(1, 7), "x5": Fraction(4)},
    ],
)
def test_w1_coefficients_match_group_product(point):
    """The X coefficients are the components of v1 at the point."""
    v = build_v(W1, point)
    for b in BASIS:
        assert v[b] == X_COEFFICIENTS[b](*(point[f"x{k}"] for k in range(6)))


def test_w2_coefficients_match_group_product():
    """The Y coefficients are the components of v2 at the point."""
    y = {"y0": Fraction(2), "y1": Fraction(3), "y2": Fraction(1, 2), "y3": Fraction(5),
         "y4": Fraction(2, 3), "y5": Fraction(7)}
    v = build_v(W2, y)
    for b in BASIS:
        assert v[b] == Y_COEFFICIENTS[b](*(y[f"y{k}"] for k in range(6)))


def test_ones_report():
    """The all-ones values report passes."""
    assert check_ones_values().passed


def test_all_formulas_positive():
    """Every registered formula is subtraction-free."""
    assert get_formula("E").is_positive() is Positivity.VERIFIED_POSITIVE
    assert check_positivity().passed


@pytest.mark.parametrize("i", INDICES)
def test_torus_scales_by_coroot_pairing(i):
    """alpha_i^vee(c) scales each basis vector by c to its coroot pairing."""
    c = Fraction(2)
    for b in BASIS:
        image = torus_act(i, c, ModuleVector.basis(b))
        assert image == ModuleVector.basis(b).scale(c ** coroot_pairing(i, weight_of(b)))


@pytest.mark.parametrize("i", INDICES)
def test_y_matrix_columns(i):
    """Columns are the images of basis vectors; the diagonal is the torus part."""
    c = Fraction(3, 2)
    matrix = y_matrix(i, c)
    for k, b in enumerate(BASIS):
        column = [row[k] for row in matrix]
        assert column == apply_y(i, c, ModuleVector.basis(b)).to_list()
        assert matrix[k][k] == c ** coroot_pairing(i, weight_of(b))


def test_lemma_coefficients_certified(checker):
    """The transcribed X and Y coefficients equal the chart vectors."""
    reports = check_lemma_coefficients(checker)
    assert [r.identity for r in reports] == ["lemma.w1", "lemma.w2"]
    assert all(r.passed for r in reports)

"""
Tests for max-plus polynomials, tropicalization and the valuation oracle.
"""

import json

import pytest

from geomcrystal.formulas import get_formula
from ratfunc.rational import RationalFunction
from ratfunc.vartable import X_TABLE
from tropical.polynomial import (
    AffineForm,
    PiecewiseLinearMap,
    TropicalPolynomial,
    tropicalize,
)
from tropical.valuation import valuation_oracle
from utils.errors import PositivityError, StructuralError, UndefinedValuationError

ORIGIN = (0,) * 7


def _xi(**coords):
    return tuple(coords.get(n, 0) for n in X_TABLE.names)


def test_single_monomial_is_linear():
    """gamma2 tropicalizes to 2xi2 + 2xi4 - xi1 - xi3 - xi5."""
    ratio = tropicalize(get_formula("gamma2").body)
    assert ratio.is_linear()
    assert ratio.num.forms == (AffineForm((0, -1, 2, -1, 2, -1, 0)),)
    assert ratio.evaluate(_xi(x2=1, x4=1)) == 4
    assert ratio.evaluate(_xi(x1=1, x3=2, x5=3)) == -6


def test_two_monomials_give_a_max():
    """eps2 tropicalizes to max(xi1 - xi2, xi1 + xi3 - 2 xi2 - xi4)."""
    ratio = tropicalize(get_formula("eps2").body)
    assert len(ratio.num) == 2
    assert ratio.evaluate(ORIGIN) == 0
    assert ratio.evaluate(_xi(x2=-1)) == 2
    assert ratio.evaluate(_xi(x3=5)) == 5


def test_constant_one_is_zero():
    """The constant 1 tropicalizes to 0."""
    ratio = tropicalize(RationalFunction.constant(X_TABLE, 1))
    assert ratio.evaluate(_xi(x0=3, c=-2)) == 0


def test_subtraction_is_rejected():
    """Functions without a subtraction-free witness cannot be tropicalized."""
    x = RationalFunction.variables(X_TABLE)
    with pytest.raises(PositivityError):
        tropicalize(x[0] - x[1])


def test_empty_polynomial_rejected():
    """A tropical polynomial needs at least one form."""
    with pytest.raises(StructuralError):
        TropicalPolynomial(X_TABLE, [])


def test_duplicate_forms_collapse():
    """Repeated affine forms are stored once."""
    form = AffineForm(X_TABLE.unit_vector("x0"))
    assert len(TropicalPolynomial(X_TABLE, [form, form])) == 1


def test_max_plus_laws():
    """trop(f g) = trop f + trop g and trop(f + g) = max(trop f, trop g)."""
    f = get_formula("eps1").body
    g = get_formula("eps2").body
    tf, tg = tropicalize(f), tropicalize(g)
    product = tropicalize(f * g)
    total = tropicalize(f + g)
    for xi in (ORIGIN, _xi(x0=2, x1=-1, x3=4), _xi(x2=-3, x4=2, x5=-1), _xi(x0=-5, x1=5, x2=1)):
        assert product.evaluate(xi) == tf.evaluate(xi) + tg.evaluate(xi)
        assert total.evaluate(xi) == max(tf.evaluate(xi), tg.evaluate(xi))


def test_polynomial_operations():
    """Tropical sum unions the forms, tropical product adds them pairwise."""
    p = TropicalPolynomial(X_TABLE, [AffineForm(X_TABLE.unit_vector("x0"))])
    q = TropicalPolynomial(X_TABLE, [AffineForm(X_TABLE.unit_vector("x1"), 2)])
    xi = _xi(x0=3, x1=-1)
    assert (p + q).evaluate(xi) == 3
    assert (p * q).evaluate(xi) == 4


def test_piecewise_linear_json_format():
    """Coordinates carry num and den lists of const/grad forms."""
    pl_map = PiecewiseLinearMap.from_functions(X_TABLE, {"eps2": get_formula("eps2").body})
    data = json.loads(pl_map.to_json())
    assert data["vars"] == list(X_TABLE.names)
    assert set(data["coordinates"]["eps2"]) == {"num", "den"}
    assert data["coordinates"]["eps2"]["num"][0]["const"] == 0
    restored = PiecewiseLinearMap.from_json(pl_map.to_json())
    assert restored.evaluate(_xi(x2=-1)) == {"eps2": 2}


def test_piecewise_linear_json_is_deterministic():
    """Serializing twice gives identical text."""
    first = PiecewiseLinearMap.from_functions(X_TABLE, {"eps0": get_formula("eps0").body}).to_json()
    second = PiecewiseLinearMap.from_functions(X_TABLE, {"eps0": get_formula("eps0").body}).to_json()
    assert first == second


def test_valuation_of_monomial():
    """x2 x4 at xi = (0,0,2,0,3,0) has valuation 5."""
    x = RationalFunction.variables(X_TABLE)
    assert valuation_oracle(x[2] * x[4], _xi(x2=2, x4=3)) == 5


def test_valuation_constant_dominates():
    """1 + x0 at xi0 = -1 has valuation 0."""
    x = RationalFunction.variables(X_TABLE)
    assert valuation_oracle(1 + x[0], _xi(x0=-1)) == 0


def test_valuation_of_eps2_at_origin():
    """Both monomials of eps2 have degree 0 at the origin."""
    assert valuation_oracle(get_formula("eps2").body, ORIGIN) == 0


def test_valuation_undefined_after_cancellation():
    """x0 - x1 vanishes identically under x -> t^0."""
    x = RationalFunction.variables(X_TABLE)
    with pytest.raises(UndefinedValuationError):
        valuation_oracle(x[0] - x[1], ORIGIN)


def test_valuation_checks_length():
    """The cocharacter must cover the table."""
    with pytest.raises(StructuralError):
        valuation_oracle(get_formula("eps2").body, (0, 0))

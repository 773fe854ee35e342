"""
Tests for factored products, substitution and expression JSON.
"""

from fractions import Fraction

import pytest

from ratfunc.factored import FactoredRational
from ratfunc.rational import RationalFunction
from ratfunc.serialize import rf_from_json, rf_to_json
from ratfunc.substitute import rf_substitute, substitute_factored
from ratfunc.vartable import X_TABLE, Y_TABLE
from utils.errors import StructuralError


def test_common_factor_cancels_without_expansion():
    """(x0 + x1)^5 / (x0 + x1)^5 is recognised as one."""
    s = FactoredRational.variable(X_TABLE, "x0") + FactoredRational.variable(X_TABLE, "x1")
    assert (s**5 / s**5).equals(1) is True


def test_equals_respects_budget():
    """A tiny budget defers the comparison instead of expanding."""
    x0 = FactoredRational.variable(X_TABLE, "x0")
    x1 = FactoredRational.variable(X_TABLE, "x1")
    left = (x0 + x1) ** 6
    right = (x0 + 2 * x1) ** 6
    assert left.equals(right, term_budget=1) is None
    assert left.equals(right) is False


def test_expand_matches_rational_function():
    """Expanding a factored product gives the ordinary quotient."""
    x0 = FactoredRational.variable(X_TABLE, "x0")
    x1 = FactoredRational.variable(X_TABLE, "x1")
    f = (x0 + x1) * (x0 + 1) / x1
    r0 = RationalFunction.variable(X_TABLE, "x0")
    r1 = RationalFunction.variable(X_TABLE, "x1")
    assert f.expand() == (r0 + r1) * (r0 + 1) / r1


def test_factored_evaluate():
    """Evaluation multiplies the factor values."""
    x0 = FactoredRational.variable(X_TABLE, "x0")
    f = (x0 + 1) ** 2 / x0
    assert f.evaluate({"x0": Fraction(2)}) == Fraction(9, 2)


def test_substitution_composes():
    """y0 + y1 with y0 -> x0^2, y1 -> x0 x1."""
    y0 = RationalFunction.variable(Y_TABLE, "y0")
    y1 = RationalFunction.variable(Y_TABLE, "y1")
    x = {n: RationalFunction.variable(X_TABLE, n) for n in X_TABLE.names}
    subst = {"y0": x["x0"] ** 2, "y1": x["x0"] * x["x1"], "y2": x["x2"], "y3": x["x3"],
             "y4": x["x4"], "y5": x["x5"], "c": x["c"]}
    assert rf_substitute(y0 + y1, subst) == x["x0"] * (x["x0"] + x["x1"])


def test_substitution_must_cover_all_variables():
    """Missing substitutions are structural errors."""
    y0 = RationalFunction.variable(Y_TABLE, "y0")
    with pytest.raises(StructuralError):
        substitute_factored(y0, {"y0": RationalFunction.variable(X_TABLE, "x0")})


def test_expression_json_round_trip():
    """Writing and reading back gives an equal function and identical text."""
    x = RationalFunction.variables(X_TABLE)
    f = (x[0] + Fraction(3, 7) * x[1] ** 2) / (x[2] + x[6])
    text = rf_to_json(f)
    assert rf_from_json(text) == f
    assert rf_to_json(rf_from_json(text)) == text


def test_expression_json_rejects_garbage():
    """Invalid JSON is a structural error."""
    with pytest.raises(StructuralError):
        rf_from_json("{not json")


def test_expression_json_round_trip_with_negative_exponents():
    """Laurent terms survive the round trip with their negative exponents."""
    x = RationalFunction.variables(X_TABLE)
    f = x[0] ** -2 * x[6] ** -1 / (1 + x[1] ** -1)
    text = rf_to_json(f)
    back = rf_from_json(text)
    assert back == f
    assert rf_to_json(back) == text
    point = {"x0": Fraction(2), "x1": Fraction(3), "x2": Fraction(1), "x3": Fraction(1),
             "x4": Fraction(1), "x5": Fraction(1), "c": Fraction(5)}
    assert back.evaluate(point) == Fraction(3, 80)

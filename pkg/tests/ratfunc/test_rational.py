"""
Tests for Laurent polynomials and rational functions.
"""

from fractions import Fraction

import pytest

from ratfunc.laurent import LaurentPolynomial
from ratfunc.rational import Positivity, RationalFunction, rf_equal, rf_eval, rf_is_positive
from ratfunc.vartable import X_TABLE, Y_TABLE
from utils.errors import EvaluationError, StructuralError


@pytest.fixture
def xs():
    """x0..x5, c as rational functions."""
    return RationalFunction.variables(X_TABLE)


def test_laurent_difference_of_squares():
    """(x0 + 1)(x0 - 1) expands to x0^2 - 1."""
    x0 = LaurentPolynomial.variable(X_TABLE, "x0")
    assert (x0 + 1) * (x0 - 1) == x0**2 - 1


def test_laurent_negative_powers_cancel():
    """x0 * x0^-1 is the constant one."""
    x0 = LaurentPolynomial.variable(X_TABLE, "x0")
    inverse = LaurentPolynomial.monomial(X_TABLE, X_TABLE.unit_vector("x0", -1))
    assert (x0 * inverse).is_constant()
    assert (x0 * inverse).constant_value() == 1


def test_exponent_length_is_checked():
    """Exponent vectors must match the table."""
    with pytest.raises(StructuralError):
        LaurentPolynomial(X_TABLE, {(1, 2): 1})


def test_mixed_tables_rejected():
    """Operands over different tables do not combine."""
    x0 = RationalFunction.variable(X_TABLE, "x0")
    y0 = RationalFunction.variable(Y_TABLE, "y0")
    with pytest.raises(StructuralError):
        x0 + y0


def test_quotient_equality_by_cross_multiplication(xs):
    """(x0^2 - 1)/(x0 - 1) equals x0 + 1 without a gcd."""
    x0 = xs[0]
    assert (x0**2 - 1) / (x0 - 1) == x0 + 1
    assert rf_equal((x0**2 - 1) / (x0 - 1), x0 + 1)


def test_negative_power_is_reciprocal(xs):
    """f^-2 equals 1/f^2."""
    f = xs[0] + xs[1]
    assert f**-2 == 1 / (f * f)


def test_evaluate(xs):
    """(x0 + c)/x1 at x0=1, x1=2, c=3."""
    x0, x1, c = xs[0], xs[1], xs[6]
    f = (x0 + c) / x1
    assert rf_eval(f, {"x0": Fraction(1), "x1": Fraction(2), "c": Fraction(3)}) == 2


def test_evaluate_only_needs_used_variables(xs):
    """Variables that do not occur may be left out of the point."""
    assert rf_eval(xs[2] * 3, {"x2": Fraction(1, 2)}) == Fraction(3, 2)


def test_evaluate_zero_denominator(xs):
    """A vanishing denominator raises EvaluationError."""
    f = 1 / (xs[0] - xs[1])
    with pytest.raises(EvaluationError):
        rf_eval(f, {"x0": Fraction(1), "x1": Fraction(1)})


def test_missing_variable(xs):
    """A point missing a used variable is rejected."""
    with pytest.raises(StructuralError):
        rf_eval(xs[0] + xs[1], {"x0": Fraction(1)})


def test_positivity(xs):
    """Subtraction-free quotients are verified positive; differences are not."""
    assert rf_is_positive((xs[0] + 2 * xs[1]) / (xs[2] + xs[3])) is Positivity.VERIFIED_POSITIVE
    assert rf_is_positive(xs[0] - xs[1]) is Positivity.NOT_VERIFIED


def test_to_sympy_matches_evaluation(xs):
    """The sympy rendering evaluates to the same value."""
    import sympy

    f = (xs[0] + xs[1] ** 2) / xs[2]
    expr = f.to_sympy()
    value = expr.subs({sympy.Symbol("x0", positive=True): 1, sympy.Symbol("x1", positive=True): 2,
                       sympy.Symbol("x2", positive=True): 5})
    assert value == sympy.Rational(1)

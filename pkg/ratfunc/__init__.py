"""Exact Laurent polynomials and rational functions over the rationals."""

from ratfunc.factored import FactoredRational
from ratfunc.laurent import LaurentPolynomial, PolyOp, poly_arith
from ratfunc.rational import (
    Positivity,
    RationalFunction,
    RfOp,
    rf_arith,
    rf_equal,
    rf_eval,
    rf_is_positive,
)
from ratfunc.substitute import rf_substitute, substitute_factored
from ratfunc.vartable import X_TABLE, Y_TABLE, VarTable

__all__ = [
    "FactoredRational",
    "LaurentPolynomial",
    "PolyOp",
    "Positivity",
    "RationalFunction",
    "RfOp",
    "VarTable",
    "X_TABLE",
    "Y_TABLE",
    "poly_arith",
    "rf_arith",
    "rf_equal",
    "rf_eval",
    "rf_is_positive",
    "rf_substitute",
    "substitute_factored",
]

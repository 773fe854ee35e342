"""
The valuation oracle: substitute x_k -> t^xi_k (and c -> t^n) exactly and
read off the order of the pole at t = infinity.
"""

from __future__ import annotations

from collections.abc import Sequence

from ratfunc.laurent import LaurentPolynomial
from ratfunc.rational import RationalFunction
from utils.errors import StructuralError, UndefinedValuationError


def _top_degree(poly: LaurentPolynomial, xi: Sequence[int], part: str) -> int:
    degrees = poly.univariate_degrees(xi)
    if not degrees:
        raise UndefinedValuationError(
            f"The {part} vanishes after substitution",
            details={"xi": list(xi)},
        )
    return max(degrees)


def valuation_oracle(f: RationalFunction, xi: Sequence[int]) -> int:
    if len(xi) != len(f.table):
        raise StructuralError(
            "Cocharacter length does not match the variable table",
            details={"expected": len(f.table), "got": len(xi)},
        )
    return _top_degree(f.num, xi, "numerator") - _top_degree(f.den, xi, "denominator")

"""
Expression JSON for rational functions.

{"vars": [...], "num": [{"coef": "p/q", "exp": [...]}, ...], "den": [...]}
Terms are written in descending graded-lex order, so equal expressions
serialize to identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ratfunc.laurent import LaurentPolynomial
from ratfunc.rational import RationalFunction
from ratfunc.vartable import VarTable
from utils.errors import StructuralError


def _coef_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def poly_to_terms(poly: LaurentPolynomial) -> list[dict[str, Any]]:
    return [{"coef": _coef_text(q), "exp": list(exp)} for exp, q in poly.sorted_terms()]


def poly_from_terms(table: VarTable, terms: list[dict[str, Any]]) -> LaurentPolynomial:
    parsed: dict[tuple[int, ...], Fraction] = {}
    for term in terms:
        try:
            exp = tuple(int(e) for e in term["exp"])
            coef = Fraction(term["coef"])
        except (KeyError, TypeError, ValueError) as e:
            raise StructuralError("Malformed term in expression JSON", cause=e) from e
        if exp in parsed:
            raise StructuralError("Repeated exponent in expression JSON", details={"exp": exp})
        parsed[exp] = coef
    return LaurentPolynomial(table, parsed)


def rf_to_dict(f: RationalFunction) -> dict[str, Any]:
    return {
        "vars": list(f.table.names),
        "num": poly_to_terms(f.num),
        "den": poly_to_terms(f.den),
    }


def rf_from_dict(data: dict[str, Any]) -> RationalFunction:
    try:
        table = VarTable(tuple(data["vars"]))
        num = poly_from_terms(table, data["num"])
        den = poly_from_terms(table, data["den"])
    except KeyError as e:
        raise StructuralError(f"Missing key in expression JSON: {e}") from e
    return RationalFunction(num, den)


def rf_to_json(f: RationalFunction, indent: int | None = None) -> str:
    return json.dumps(rf_to_dict(f), indent=indent, sort_keys=True)


def rf_from_json(text: str) -> RationalFunction:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructuralError("Invalid expression JSON", cause=e) from e
    return rf_from_dict(data)

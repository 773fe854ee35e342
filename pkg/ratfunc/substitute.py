"""
Composition of rational functions.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from typing import Any

from ratfunc.factored import FactoredRational
from ratfunc.laurent import LaurentPolynomial
from ratfunc.rational import RationalFunction
from ratfunc.vartable import VarTable
from utils.errors import DomainError, StructuralError

logger = logging.getLogger(__name__)

Substitution = Mapping[str, Any]


def _target_table(subst: Substitution) -> VarTable:
    tables = {v.table for v in subst.values() if hasattr(v, "table")}
    if len(tables) != 1:
        raise StructuralError(
            "Substituted values must share exactly one variable table",
            details={"tables": len(tables)},
        )
    return tables.pop()


def _substitute_poly(
    poly: LaurentPolynomial, values: list[FactoredRational], table: VarTable
) -> FactoredRational:
    summands = []
    for exp, q in poly.terms.items():
        term = FactoredRational.constant(table, q)
        for value, e in zip(values, exp):
            if e:
                term = term * value**e
        summands.append(term)
    return FactoredRational.sum(table, summands)


def substitute_factored(
    f: RationalFunction | LaurentPolynomial, subst: Substitution
) -> FactoredRational:
    """Substitute and keep the result factored."""
    table = _target_table(subst)
    missing = [n for n in f.table.names if n not in subst]
    if missing:
        raise StructuralError(
            "Substitution does not cover every variable",
            details={"missing": ",".join(missing)},
        )
    values = [FactoredRational.lift(table, subst[n]) for n in f.table.names]
    if isinstance(f, LaurentPolynomial):
        return _substitute_poly(f, values, table)
    num = _substitute_poly(f.num, values, table)
    den = _substitute_poly(f.den, values, table)
    if den.is_zero():
        raise DomainError(
            "Substitution makes the denominator identically zero",
            details={"den": str(f.den)},
        )
    return num / den


def rf_substitute(f: RationalFunction, subst: Substitution) -> RationalFunction:
    result = substitute_factored(f, subst)
    logger.debug(f"Substitution result has {len(result.factors)} factors")
    return result.expand()


def identity_substitution(table: VarTable, names: list[str] | None = None) -> dict[str, Any]:
    return {n: RationalFunction.variable(table, n) for n in (names or table.names)}

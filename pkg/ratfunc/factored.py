"""
Rational functions kept as products of polynomial factors.

A value is ``scalar * x^monomial * prod(f ** e for f, e in factors)``. Every
factor is canonical: not a monomial, no variable divides it, leading
coefficient 1 under graded-lex order. Products, quotients and powers only
add multiplicities, so a factor that appears on both sides of a quotient
cancels before anything is expanded. Sums pull out the factors common to all
summands and expand only the remainders.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from operator import add, neg, sub
from typing import Any

from ratfunc.laurent import Exponent, LaurentPolynomial, as_fraction
from ratfunc.rational import RationalFunction
from ratfunc.vartable import VarTable
from utils.errors import DomainError, EvaluationError

logger = logging.getLogger(__name__)


def normalize_factor(
    poly: LaurentPolynomial,
) -> tuple[Fraction, Exponent, LaurentPolynomial | None]:
    """Split a nonzero polynomial into scalar, monomial and canonical factor."""
    if poly.is_zero():
        raise DomainError("Cannot normalize the zero polynomial")
    low = poly.min_exponents()
    if poly.is_monomial():
        return poly.leading_coefficient(), low, None
    factor = poly.shift(tuple(map(neg, low)))
    lc = factor.leading_coefficient()
    if lc != 1:
        factor = factor.scale(1 / lc)
    return lc, low, factor


class FactoredRational:
    __slots__ = ("table", "scalar", "monomial", "factors")

    def __init__(
        self,
        table: VarTable,
        scalar: Any = 1,
        monomial: Sequence[int] | None = None,
        factors: Mapping[LaurentPolynomial, int] | None = None,
    ) -> None:
        self.table = table
        self.scalar = as_fraction(scalar)
        self.monomial: Exponent = tuple(monomial) if monomial else table.zero_vector()
        if self.scalar:
            self.factors = {f: e for f, e in (factors or {}).items() if e}
        else:
            self.monomial = table.zero_vector()
            self.factors = {}

    # constructors

    @classmethod
    def constant(cls, table: VarTable, value: Any) -> FactoredRational:
        return cls(table, value)

    @classmethod
    def variable(cls, table: VarTable, name: str) -> FactoredRational:
        return cls(table, 1, table.unit_vector(name))

    @classmethod
    def from_poly(cls, poly: LaurentPolynomial) -> FactoredRational:
        if poly.is_zero():
            return cls(poly.table, 0)
        scalar, mono, factor = normalize_factor(poly)
        return cls(poly.table, scalar, mono, {factor: 1} if factor is not None else None)

    @classmethod
    def from_rational(cls, rf: RationalFunction) -> FactoredRational:
        if isinstance(rf, FactoredRational):
            return rf
        return cls.from_poly(rf.num) / cls.from_poly(rf.den)

    @classmethod
    def lift(cls, table: VarTable, value: Any) -> FactoredRational:
        if isinstance(value, FactoredRational):
            table.require_same(value.table)
            return value
        if isinstance(value, RationalFunction):
            table.require_same(value.table)
            return cls.from_rational(value)
        if isinstance(value, LaurentPolynomial):
            table.require_same(value.table)
            return cls.from_poly(value)
        return cls.constant(table, value)

    # inspection

    def is_zero(self) -> bool:
        return not self.scalar

    def is_unit(self) -> bool:
        """True for a scalar times a monomial."""
        return not self.factors

    def estimated_terms(self) -> int:
        """Upper bound on the term count of the expanded numerator plus denominator."""
        num = den = 1
        for f, e in self.factors.items():
            if e > 0:
                num *= len(f) ** e
            else:
                den *= len(f) ** (-e)
        return num + den

    def degree_bound(self) -> int:
        return sum(f.degree_span() * abs(e) for f, e in self.factors.items())

    # arithmetic

    def __mul__(self, other: Any) -> FactoredRational:
        other = FactoredRational.lift(self.table, other)
        if self.is_zero() or other.is_zero():
            return FactoredRational(self.table, 0)
        factors = dict(self.factors)
        for f, e in other.factors.items():
            factors[f] = factors.get(f, 0) + e
        return FactoredRational(
            self.table,
            self.scalar * other.scalar,
            tuple(map(add, self.monomial, other.monomial)),
            factors,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> FactoredRational:
        if self.is_zero():
            raise DomainError("Division by the zero function")
        return FactoredRational(
            self.table,
            1 / self.scalar,
            tuple(map(neg, self.monomial)),
            {f: -e for f, e in self.factors.items()},
        )

    def __truediv__(self, other: Any) -> FactoredRational:
        return self * FactoredRational.lift(self.table, other).reciprocal()

    def __rtruediv__(self, other: Any) -> FactoredRational:
        return FactoredRational.lift(self.table, other) * self.reciprocal()

    def __pow__(self, power: int) -> FactoredRational:
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return self.reciprocal() ** (-power)
        if power == 0:
            return FactoredRational(self.table, 1)
        return FactoredRational(
            self.table,
            self.scalar**power,
            tuple(power * e for e in self.monomial),
            {f: power * e for f, e in self.factors.items()},
        )

    def __neg__(self) -> FactoredRational:
        return FactoredRational(self.table, -self.scalar, self.monomial, self.factors)

    def __add__(self, other: Any) -> FactoredRational:
        return FactoredRational.sum(self.table, [self, other])

    __radd__ = __add__

    def __sub__(self, other: Any) -> FactoredRational:
        return FactoredRational.sum(self.table, [self, -FactoredRational.lift(self.table, other)])

    def __rsub__(self, other: Any) -> FactoredRational:
        return FactoredRational.sum(self.table, [other, -self])

    @classmethod
    def sum(cls, table: VarTable, values: Iterable[Any]) -> FactoredRational:
        terms = [t for t in (cls.lift(table, v) for v in values) if not t.is_zero()]
        if not terms:
            return cls(table, 0)
        if len(terms) == 1:
            return terms[0]

        names = set().union(*(t.factors for t in terms))
        common = {f: min(t.factors.get(f, 0) for t in terms) for f in names}
        common = {f: g for f, g in common.items() if g}
        low = tuple(min(col) for col in zip(*(t.monomial for t in terms)))

        powers: dict[tuple[LaurentPolynomial, int], LaurentPolynomial] = {}
        residual = LaurentPolynomial.zero(table)
        for t in terms:
            part = LaurentPolynomial.monomial(table, tuple(map(sub, t.monomial, low)), t.scalar)
            rest = sorted(
                ((f, t.factors.get(f, 0) - common.get(f, 0)) for f in names),
                key=lambda item: len(item[0]),
            )
            for f, r in rest:
                if not r:
                    continue
                key = (f, r)
                if key not in powers:
                    powers[key] = f**r
                part = part * powers[key]
            residual = residual + part

        if residual.is_zero():
            return cls(table, 0)
        scalar, mono, factor = normalize_factor(residual)
        factors = dict(common)
        if factor is not None:
            factors[factor] = factors.get(factor, 0) + 1
        return cls(table, scalar, tuple(map(add, low, mono)), factors)

    # expansion, evaluation, comparison

    def expand(self) -> RationalFunction:
        num = LaurentPolynomial.monomial(self.table, self.monomial, self.scalar)
        den = LaurentPolynomial.one(self.table)
        for f, e in sorted(self.factors.items(), key=lambda item: len(item[0])):
            if e > 0:
                num = num * f**e
            else:
                den = den * f ** (-e)
        return RationalFunction(num, den)

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        values = [as_fraction(point.get(n, 0)) for n in self.table.names]
        value = self.scalar
        for v, e in zip(values, self.monomial):
            if e:
                if not v:
                    raise EvaluationError("Monomial pole at the point", point=dict(point))
                value *= v**e
        for f, e in self.factors.items():
            fv = f.evaluate(values, point=dict(point))
            if not fv and e < 0:
                raise EvaluationError("Denominator vanishes at the point", point=dict(point))
            value *= fv**e
        return value

    def equals(self, other: Any, term_budget: int | None = None) -> bool | None:
        """Exact equality; None when the expansion would exceed term_budget."""
        other = FactoredRational.lift(self.table, other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        quotient = self / other
        if quotient.is_unit():
            return quotient.scalar == 1 and not any(quotient.monomial)
        if term_budget is not None and quotient.estimated_terms() > term_budget:
            logger.debug(
                f"Expansion estimate {quotient.estimated_terms()} exceeds budget {term_budget}"
            )
            return None
        rf = quotient.expand()
        return rf.num == rf.den

    def __str__(self) -> str:
        parts = [str(self.scalar)]
        parts += [f"{n}^{e}" for n, e in zip(self.table.names, self.monomial) if e]
        parts += [f"({f})^{e}" for f, e in self.factors.items()]
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"FactoredRational({len(self.factors)} factors)"

"""
Quotients of Laurent polynomials.

No polynomial gcd is taken. A quotient is normalized only up to units of the
Laurent ring: the monomial content of the denominator is moved into the
numerator and the denominator is made monic under graded-lex order. Equality
is decided by cross-multiplication.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from enum import Enum
from fractions import Fraction
from numbers import Rational
from operator import neg
from typing import Any

from ratfunc.laurent import LaurentPolynomial, as_fraction
from ratfunc.vartable import VarTable
from utils.errors import DomainError, EvaluationError, StructuralError

logger = logging.getLogger(__name__)

RationalPoint = Mapping[str, Fraction]


class RfOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Positivity(str, Enum):
    VERIFIED_POSITIVE = "verified_positive"
    NOT_VERIFIED = "not_verified"


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None) -> None:
        if den is None:
            den = LaurentPolynomial.one(num.table)
        num.table.require_same(den.table)
        if den.is_zero():
            raise DomainError("Denominator is the zero polynomial", details={"num": str(num)})
        if num.is_zero():
            self.num = num
            self.den = LaurentPolynomial.one(num.table)
            return
        low = den.min_exponents()
        if any(low):
            shift = tuple(map(neg, low))
            num, den = num.shift(shift), den.shift(shift)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    # constructors

    @classmethod
    def constant(cls, table: VarTable, value: Any) -> RationalFunction:
        return cls(LaurentPolynomial.constant(table, value))

    @classmethod
    def variable(cls, table: VarTable, name: str) -> RationalFunction:
        return cls(LaurentPolynomial.variable(table, name))

    @classmethod
    def variables(cls, table: VarTable) -> list[RationalFunction]:
        return [cls.variable(table, name) for name in table.names]

    @classmethod
    def from_value(cls, table: VarTable, value: Any) -> RationalFunction:
        if isinstance(value, RationalFunction):
            table.require_same(value.table)
            return value
        if isinstance(value, LaurentPolynomial):
            return cls(value)
        return cls.constant(table, value)

    # inspection

    @property
    def table(self) -> VarTable:
        return self.num.table

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def is_positive(self) -> Positivity:
        return rf_is_positive(self)

    def term_count(self) -> int:
        return len(self.num) + len(self.den)

    def variables_used(self) -> set[str]:
        return self.num.variables_used() | self.den.variables_used()

    # arithmetic

    def _coerce(self, other: Any) -> RationalFunction:
        if isinstance(other, RationalFunction):
            self.table.require_same(other.table)
            return other
        if isinstance(other, LaurentPolynomial):
            self.table.require_same(other.table)
            return RationalFunction(other)
        if isinstance(other, (int, Rational)):
            return RationalFunction.constant(self.table, other)
        return NotImplemented

    def __add__(self, other: Any) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: Any) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other: Any) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.num and not self.den.is_constant():
            return RationalFunction(self.num, other.den)
        if self.num == other.den and not self.num.is_constant():
            return RationalFunction(other.num, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        if self.is_zero():
            raise DomainError("Division by the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: Any) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other: Any) -> RationalFunction:
        return self.reciprocal() * other

    def __pow__(self, power: int) -> RationalFunction:
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return self.reciprocal() ** (-power)
        return RationalFunction(self.num**power, self.den**power)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RationalFunction, LaurentPolynomial, int, Rational)):
            other = self._coerce(other)
            return rf_equal(self, other)
        return NotImplemented

    __hash__ = None  # equality is semantic, not structural

    # evaluation and rendering

    def evaluate(self, point: RationalPoint) -> Fraction:
        return rf_eval(self, point)

    def to_sympy(self, symbols: Mapping[str, Any] | None = None):
        import sympy

        syms = symbols or {n: sympy.Symbol(n, positive=True) for n in self.table.names}
        return self.num.to_sympy(syms) / self.den.to_sympy(syms)

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def rf_arith(a: RationalFunction, b: RationalFunction, op: RfOp | str) -> RationalFunction:
    a.table.require_same(b.table)
    op = RfOp(op)
    if op is RfOp.ADD:
        return a + b
    if op is RfOp.SUB:
        return a - b
    if op is RfOp.MUL:
        return a * b
    return a / b


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    a.table.require_same(b.table)
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def point_values(table: VarTable, point: RationalPoint) -> list[Fraction]:
    missing = [n for n in table.names if n not in point]
    if missing:
        raise StructuralError(
            "Point does not cover all variables", details={"missing": ",".join(missing)}
        )
    return [as_fraction(point[n]) for n in table.names]


def rf_eval(f: RationalFunction, p: RationalPoint) -> Fraction:
    used = f.variables_used()
    values = [
        as_fraction(p[n]) if n in p else Fraction(0) for n in f.table.names
    ]
    missing = sorted(n for n in used if n not in p)
    if missing:
        raise StructuralError(
            "Point does not cover all variables", details={"missing": ",".join(missing)}
        )
    den = f.den.evaluate(values, point=dict(p))
    if not den:
        raise EvaluationError("Denominator vanishes at the point", point=dict(p))
    return f.num.evaluate(values, point=dict(p)) / den


def rf_is_positive(f: RationalFunction) -> Positivity:
    if f.num.has_positive_coefficients() and f.den.has_positive_coefficients():
        return Positivity.VERIFIED_POSITIVE
    return Positivity.NOT_VERIFIED


def rf_values(fs: Sequence[RationalFunction], p: RationalPoint) -> list[Fraction]:
    return [rf_eval(f, p) for f in fs]

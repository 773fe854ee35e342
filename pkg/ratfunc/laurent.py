"""
Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial is a map from integer exponent vectors (negative entries allowed)
to nonzero Fractions. The map is canonical: zero coefficients are never
stored, so two polynomials over the same table are equal iff their maps are.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from enum import Enum
from fractions import Fraction
from numbers import Rational
from operator import add, sub
from typing import Any

from ratfunc.vartable import VarTable
from utils.errors import DomainError, EvaluationError, StructuralError

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    """Graded lexicographic key: total degree first, then lexicographic."""
    return (sum(exp), exp)


def as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


class LaurentPolynomial:
    __slots__ = ("table", "_terms", "_hash")

    def __init__(
        self,
        table: VarTable,
        terms: Mapping[Exponent, Any] | None = None,
    ) -> None:
        self.table = table
        clean: dict[Exponent, Fraction] = {}
        n = len(table)
        for exp, coef in (terms or {}).items():
            if len(exp) != n:
                raise StructuralError(
                    "Exponent vector length does not match the variable table",
                    details={"exponent": exp, "variables": n},
                )
            q = as_fraction(coef)
            if q:
                clean[tuple(exp)] = clean.get(tuple(exp), Fraction(0)) + q
        self._terms = {e: q for e, q in clean.items() if q}
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, table: VarTable, terms: dict[Exponent, Fraction]) -> LaurentPolynomial:
        # terms must already be canonical: right length, no zeros
        poly = cls.__new__(cls)
        poly.table = table
        poly._terms = terms
        poly._hash = None
        return poly

    # constructors

    @classmethod
    def zero(cls, table: VarTable) -> LaurentPolynomial:
        return cls._trusted(table, {})

    @classmethod
    def one(cls, table: VarTable) -> LaurentPolynomial:
        return cls._trusted(table, {table.zero_vector(): Fraction(1)})

    @classmethod
    def constant(cls, table: VarTable, value: Any) -> LaurentPolynomial:
        q = as_fraction(value)
        return cls._trusted(table, {table.zero_vector(): q} if q else {})

    @classmethod
    def variable(cls, table: VarTable, name: str) -> LaurentPolynomial:
        return cls._trusted(table, {table.unit_vector(name): Fraction(1)})

    @classmethod
    def monomial(cls, table: VarTable, exp: Sequence[int], coef: Any = 1) -> LaurentPolynomial:
        return cls(table, {tuple(exp): coef})

    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and self.table.zero_vector() in self._terms
        )

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError("Polynomial is not constant", details={"poly": str(self)})
        return self._terms.get(self.table.zero_vector(), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise DomainError("The zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return self.table.zero_vector()
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return self.table.zero_vector()
        return tuple(max(col) for col in zip(*self._terms))

    def degree_span(self) -> int:
        """Total degree after clearing the monomial content (Laurent -> polynomial)."""
        if not self._terms:
            return 0
        low = self.min_exponents()
        return max(sum(map(sub, exp, low)) for exp in self._terms)

    def has_positive_coefficients(self) -> bool:
        return bool(self._terms) and all(q > 0 for q in self._terms.values())

    def variables_used(self) -> set[str]:
        used: set[str] = set()
        for exp in self._terms:
            used.update(name for name, e in zip(self.table.names, exp) if e)
        return used

    # equality

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self._terms.items())))
        return self._hash

    # string hashes are per process; never ship a cached one to a worker
    def __getstate__(self) -> tuple[VarTable, dict[Exponent, Fraction]]:
        return (self.table, self._terms)

    def __setstate__(self, state: tuple[VarTable, dict[Exponent, Fraction]]) -> None:
        self.table, self._terms = state
        self._hash = None

    # arithmetic

    def _coerce(self, other: Any) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            self.table.require_same(other.table)
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPolynomial.constant(self.table, other)
        return NotImplemented

    def __add__(self, other: Any) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, q in other._terms.items():
            s = terms.get(exp, 0) + q
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return LaurentPolynomial._trusted(self.table, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._trusted(self.table, {e: -q for e, q in self._terms.items()})

    def __sub__(self, other: Any) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPolynomial:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out: dict[Exponent, Fraction] = {}
        get = out.get
        big_items = list(big.items())
        for e1, q1 in small.items():
            for e2, q2 in big_items:
                exp = tuple(map(add, e1, e2))
                out[exp] = get(exp, 0) + q1 * q2
        return LaurentPolynomial._trusted(self.table, {e: q for e, q in out.items() if q})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPolynomial:
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            if not self.is_monomial():
                raise DomainError(
                    "Only monomials have Laurent inverses", details={"poly": str(self)}
                )
            (exp, q), = self._terms.items()
            return LaurentPolynomial._trusted(
                self.table, {tuple(power * e for e in exp): q**power}
            )
        result = LaurentPolynomial.one(self.table)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scale(self, factor: Any) -> LaurentPolynomial:
        q = as_fraction(factor)
        if not q:
            return LaurentPolynomial.zero(self.table)
        return LaurentPolynomial._trusted(self.table, {e: c * q for e, c in self._terms.items()})

    def shift(self, exp: Sequence[int]) -> LaurentPolynomial:
        """Multiply by the monomial x^exp."""
        if not any(exp):
            return self
        return LaurentPolynomial._trusted(
            self.table, {tuple(map(add, e, exp)): q for e, q in self._terms.items()}
        )

    # evaluation

    def evaluate(self, values: Sequence[Fraction], point: dict[str, Any] | None = None) -> Fraction:
        """Exact value at a point given in table order."""
        cache: dict[tuple[int, int], Fraction] = {}
        total = Fraction(0)
        for exp, q in self._terms.items():
            term = q
            for k, e in enumerate(exp):
                if not e:
                    continue
                key = (k, e)
                power = cache.get(key)
                if power is None:
                    v = values[k]
                    if e < 0 and not v:
                        raise EvaluationError(
                            f"Negative power of {self.table.names[k]} at zero",
                            point=point or dict(zip(self.table.names, values)),
                        )
                    power = Fraction(v) ** e
                    cache[key] = power
                term = term * power
            total += term
        return total

    def univariate_degrees(self, weights: Sequence[int]) -> dict[int, Fraction]:
        """Collapse to a univariate Laurent polynomial under x_k -> t^weights[k]."""
        out: dict[int, Fraction] = {}
        for exp, q in self._terms.items():
            d = sum(w * e for w, e in zip(weights, exp))
            out[d] = out.get(d, 0) + q
        return {d: q for d, q in out.items() if q}

    # rendering

    def to_sympy(self, symbols: Mapping[str, Any] | None = None):
        import sympy

        syms = symbols or {n: sympy.Symbol(n, positive=True) for n in self.table.names}
        expr = sympy.Integer(0)
        for exp, q in self.sorted_terms():
            term = sympy.Rational(q.numerator, q.denominator)
            for name, e in zip(self.table.names, exp):
                if e:
                    term *= syms[name] ** e
            expr += term
        return expr

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, q in self.sorted_terms():
            num = [_power(n, e) for n, e in zip(self.table.names, exp) if e > 0]
            den = [_power(n, -e) for n, e in zip(self.table.names, exp) if e < 0]
            mag = abs(q)
            body = "*".join(([str(mag)] if mag != 1 or not num else []) + num) or "1"
            if den:
                body += "/" + ("*".join(den) if len(den) == 1 else f"({'*'.join(den)})")
            parts.append(("-" if q < 0 else "+") + body)
        text = " ".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def poly_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: PolyOp | str) -> LaurentPolynomial:
    a.table.require_same(b.table)
    op = PolyOp(op)
    if op is PolyOp.ADD:
        return a + b
    if op is PolyOp.SUB:
        return a - b
    return a * b


def poly_sum(table: VarTable, polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    terms: dict[Exponent, Fraction] = {}
    for p in polys:
        table.require_same(p.table)
        for exp, q in p.terms.items():
            terms[exp] = terms.get(exp, 0) + q
    return LaurentPolynomial._trusted(table, {e: q for e, q in terms.items() if q})

"""
Max-plus polynomials and piecewise-linear maps over the integers.

A monomial q * x^e with q > 0 tropicalizes to the affine form <e, xi>: the
valuation does not see positive coefficients. Sums become maxima and
products become sums.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ratfunc.laurent import LaurentPolynomial
from ratfunc.rational import Positivity, RationalFunction, rf_is_positive
from ratfunc.vartable import VarTable
from utils.errors import PositivityError, StructuralError

Cocharacter = Sequence[int]


@dataclass(frozen=True, order=True)
class AffineForm:
    grad: tuple[int, ...]
    const: int = 0

    def evaluate(self, xi: Cocharacter) -> int:
        return self.const + sum(g * v for g, v in zip(self.grad, xi))

    def __add__(self, other: AffineForm) -> AffineForm:
        return AffineForm(tuple(a + b for a, b in zip(self.grad, other.grad)), self.const + other.const)

    def to_dict(self) -> dict[str, Any]:
        return {"const": self.const, "grad": list(self.grad)}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> AffineForm:
        try:
            return cls(tuple(int(g) for g in data["grad"]), int(data["const"]))
        except (KeyError, TypeError, ValueError) as e:
            raise StructuralError("Malformed affine form", cause=e) from e


class TropicalPolynomial:
    """max over a nonempty set of affine forms."""

    __slots__ = ("table", "forms", "_grads", "_consts")

    def __init__(self, table: VarTable, forms: Iterable[AffineForm]) -> None:
        self.table = table
        self.forms: tuple[AffineForm, ...] = tuple(sorted(set(forms), reverse=True))
        if not self.forms:
            raise StructuralError("A tropical polynomial needs at least one affine form")
        if any(len(f.grad) != len(table) for f in self.forms):
            raise StructuralError(
                "Gradient length does not match the variable table",
                details={"variables": len(table)},
            )
        self._grads = np.array([f.grad for f in self.forms], dtype=np.int64)
        self._consts = np.array([f.const for f in self.forms], dtype=np.int64)

    @classmethod
    def from_laurent(cls, poly: LaurentPolynomial) -> TropicalPolynomial:
        return cls(poly.table, (AffineForm(exp) for exp in poly.terms))

    @classmethod
    def zero(cls, table: VarTable) -> TropicalPolynomial:
        """The tropical unit: the constant form 0."""
        return cls(table, [AffineForm(table.zero_vector())])

    def evaluate(self, xi: Cocharacter) -> int:
        vector = np.asarray(xi, dtype=np.int64)
        if vector.shape != (len(self.table),):
            raise StructuralError(
                "Cocharacter length does not match the variable table",
                details={"expected": len(self.table), "got": len(vector)},
            )
        return int(np.max(self._grads @ vector + self._consts))

    def __add__(self, other: TropicalPolynomial) -> TropicalPolynomial:
        """Tropical sum: pointwise max."""
        self.table.require_same(other.table)
        return TropicalPolynomial(self.table, self.forms + other.forms)

    def __mul__(self, other: TropicalPolynomial) -> TropicalPolynomial:
        """Tropical product: pointwise sum."""
        self.table.require_same(other.table)
        return TropicalPolynomial(self.table, (f + g for f in self.forms for g in other.forms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropicalPolynomial):
            return NotImplemented
        return self.table == other.table and self.forms == other.forms

    def __hash__(self) -> int:
        return hash((self.table.names, self.forms))

    def __len__(self) -> int:
        return len(self.forms)

    def to_list(self) -> list[dict[str, Any]]:
        return [f.to_dict() for f in self.forms]

    def __str__(self) -> str:
        def form(f: AffineForm) -> str:
            parts = [
                f"{'+' if g > 0 else '-'}{abs(g) if abs(g) != 1 else ''}{name}"
                for name, g in zip(self.table.names, f.grad)
                if g
            ]
            if f.const or not parts:
                parts.append(f"{'+' if f.const >= 0 else '-'}{abs(f.const)}")
            text = "".join(parts)
            return text[1:] if text.startswith("+") else text

        texts = [form(f) for f in self.forms]
        return texts[0] if len(texts) == 1 else f"max({', '.join(texts)})"


@dataclass(frozen=True)
class TropicalRatio:
    """num - den: one output coordinate of a piecewise-linear map."""

    num: TropicalPolynomial
    den: TropicalPolynomial

    def evaluate(self, xi: Cocharacter) -> int:
        return self.num.evaluate(xi) - self.den.evaluate(xi)

    def is_linear(self) -> bool:
        return len(self.num) == 1 and len(self.den) == 1

    def to_dict(self) -> dict[str, Any]:
        return {"num": self.num.to_list(), "den": self.den.to_list()}

    def __str__(self) -> str:
        if len(self.den) == 1 and not any(self.den.forms[0].grad) and not self.den.forms[0].const:
            return str(self.num)
        return f"{self.num} - {self.den}"


def tropicalize(f: RationalFunction) -> TropicalRatio:
    """Monomials become affine forms, + becomes max, * becomes +."""
    if f.is_zero() or rf_is_positive(f) is not Positivity.VERIFIED_POSITIVE:
        raise PositivityError(
            "Only functions with a subtraction-free representation can be tropicalized",
            details={"function": str(f)[:200]},
        )
    return TropicalRatio(TropicalPolynomial.from_laurent(f.num), TropicalPolynomial.from_laurent(f.den))


@dataclass
class PiecewiseLinearMap:
    table: VarTable
    components: dict[str, TropicalRatio] = field(default_factory=dict)

    @classmethod
    def from_functions(cls, table: VarTable, functions: Mapping[str, RationalFunction]) -> PiecewiseLinearMap:
        return cls(table, {name: tropicalize(f) for name, f in functions.items()})

    def evaluate(self, xi: Cocharacter) -> dict[str, int]:
        return {name: ratio.evaluate(xi) for name, ratio in self.components.items()}

    def to_dict(self) -> dict[str, Any]:
        return {
            "vars": list(self.table.names),
            "coordinates": {name: ratio.to_dict() for name, ratio in self.components.items()},
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> PiecewiseLinearMap:
        try:
            table = VarTable(tuple(data["vars"]))
            components = {
                name: TropicalRatio(
                    TropicalPolynomial(table, (AffineForm.from_dict(f) for f in body["num"])),
                    TropicalPolynomial(table, (AffineForm.from_dict(f) for f in body["den"])),
                )
                for name, body in data["coordinates"].items()
            }
        except (KeyError, TypeError) as e:
            raise StructuralError("Malformed piecewise-linear map JSON", cause=e) from e
        return cls(table, components)

    @classmethod
    def from_json(cls, text: str) -> PiecewiseLinearMap:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise StructuralError("Invalid piecewise-linear map JSON", cause=e) from e
        return cls.from_dict(data)

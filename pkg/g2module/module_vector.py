"""
Vectors of the module over an arbitrary coefficient ring.

Coefficients only need +, * and comparison with 0, so Fractions,
RationalFunctions and FactoredRationals all work.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from typing import Any

from g2module.basis import BASIS, DIM, BasisVector
from g2module.chevalley import CHEVALLEY_TABLES, Generator
from utils.errors import StructuralError


def _is_zero(value: Any) -> bool:
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


class ModuleVector:
    __slots__ = ("_coeffs", "zero")

    def __init__(self, coeffs: Mapping[BasisVector, Any] | None = None, zero: Any = 0) -> None:
        self.zero = zero
        self._coeffs: dict[BasisVector, Any] = {
            b: v for b, v in (coeffs or {}).items() if not _is_zero(v)
        }

    @classmethod
    def basis(cls, b: BasisVector, one: Any = 1, zero: Any = 0) -> ModuleVector:
        return cls({b: one}, zero)

    @classmethod
    def from_list(cls, values: list[Any], zero: Any = 0) -> ModuleVector:
        if len(values) != DIM:
            raise StructuralError(
                "A module vector has exactly 15 coefficients", details={"got": len(values)}
            )
        return cls(dict(zip(BASIS, values)), zero)

    def coefficient(self, b: BasisVector) -> Any:
        return self._coeffs.get(b, self.zero)

    def __getitem__(self, b: BasisVector) -> Any:
        return self.coefficient(b)

    def items(self) -> Iterator[tuple[BasisVector, Any]]:
        """Nonzero coefficients in basis order."""
        return ((b, self._coeffs[b]) for b in BASIS if b in self._coeffs)

    def to_list(self) -> list[Any]:
        return [self.coefficient(b) for b in BASIS]

    def support(self) -> list[BasisVector]:
        return [b for b, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._coeffs

    # linear structure

    def __add__(self, other: ModuleVector) -> ModuleVector:
        coeffs = dict(self._coeffs)
        for b, v in other._coeffs.items():
            coeffs[b] = coeffs[b] + v if b in coeffs else v
        return ModuleVector(coeffs, self.zero)

    def __neg__(self) -> ModuleVector:
        return ModuleVector({b: -v for b, v in self._coeffs.items()}, self.zero)

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-other)

    def scale(self, factor: Any) -> ModuleVector:
        return ModuleVector({b: v * factor for b, v in self._coeffs.items()}, self.zero)

    def map_coefficients(self, fn: Callable[[BasisVector, Any], Any]) -> ModuleVector:
        return ModuleVector({b: fn(b, v) for b, v in self._coeffs.items()}, self.zero)

    def apply_generator(self, gen: Generator | str, i: int) -> ModuleVector:
        """Linear extension of apply_chevalley."""
        table = CHEVALLEY_TABLES[(Generator(gen), i)]
        coeffs: dict[BasisVector, Any] = {}
        for b, v in self._coeffs.items():
            action = table.get(b)
            if action is None:
                continue
            dst, k = action
            term = v * k
            coeffs[dst] = coeffs[dst] + term if dst in coeffs else term
        return ModuleVector(coeffs, self.zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return all(_is_zero(self.coefficient(b) - other.coefficient(b)) for b in BASIS)

    __hash__ = None

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"({v})*[{b.label}]" for b, v in self.items())

    def __repr__(self) -> str:
        return f"ModuleVector({len(self._coeffs)} nonzero)"

"""
Basis of the 15-dimensional level-zero module.

The enum order is the matrix order used everywhere: 1..6, bar 1..bar 6,
the empty vector, 0_1, 0_2.
"""

from __future__ import annotations

from enum import Enum

from utils.errors import StructuralError


class BasisVector(str, Enum):
    B1 = "1"
    B2 = "2"
    B3 = "3"
    B4 = "4"
    B5 = "5"
    B6 = "6"
    BAR1 = "1b"
    BAR2 = "2b"
    BAR3 = "3b"
    BAR4 = "4b"
    BAR5 = "5b"
    BAR6 = "6b"
    EMPTY = "empty"
    ZERO1 = "0_1"
    ZERO2 = "0_2"

    @property
    def index(self) -> int:
        return _ORDER[self]

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def is_barred(self) -> bool:
        return self.value.endswith("b")

    @property
    def partner(self) -> BasisVector | None:
        """i <-> bar i; None for the three weight-zero vectors."""
        if self.value[0].isdigit() and self.value[0] != "0":
            n = self.value[0]
            return BasisVector(n if self.is_barred else n + "b")
        return None

    @classmethod
    def parse(cls, text: str) -> BasisVector:
        key = text.strip()
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise StructuralError(
                f"Unknown basis vector {text!r}",
                details={"known": ", ".join(b.value for b in cls)},
            ) from None


BASIS: tuple[BasisVector, ...] = tuple(BasisVector)
DIM = len(BASIS)

_ORDER = {b: k for k, b in enumerate(BASIS)}

_LABELS = {b: b.value for b in BASIS}
_LABELS.update({b: b.value[0] + "̄" for b in BASIS if b.is_barred})
_LABELS.update(
    {
        BasisVector.EMPTY: "∅",
        BasisVector.ZERO1: "0₁",
        BasisVector.ZERO2: "0₂",
    }
)

_ALIASES = {
    "∅": "empty",
    "phi": "empty",
    "0₁": "0_1",
    "0₂": "0_2",
    "01": "0_1",
    "02": "0_2",
}
_ALIASES.update({f"{n}bar": f"{n}b" for n in range(1, 7)})
_ALIASES.update({f"{n}̄": f"{n}b" for n in range(1, 7)})

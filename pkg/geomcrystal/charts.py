"""
Torus charts given by reduced words.
"""

from __future__ import annotations

from dataclasses import dataclass

from g2module.basis import BasisVector
from g2module.weights import INDICES
from ratfunc.vartable import X_TABLE, Y_TABLE, VarTable
from utils.errors import DomainError, StructuralError


@dataclass(frozen=True)
class CrystalChart:
    name: str
    word: tuple[int, ...]
    coords: tuple[str, ...]
    table: VarTable
    seed: BasisVector

    def __post_init__(self) -> None:
        if len(self.word) != len(self.coords):
            raise StructuralError(
                "A chart needs one coordinate per letter of its word",
                details={"word": self.word, "coords": self.coords},
            )
        if len(set(self.coords)) != len(self.coords):
            raise StructuralError("Chart coordinates must be distinct", details={"coords": self.coords})
        if any(i not in INDICES for i in self.word):
            raise StructuralError("Word letters must be 0, 1 or 2", details={"word": self.word})
        for name in self.coords:
            self.table.index(name)

    def positions(self, i: int) -> list[int]:
        """Word positions (0-based) carrying letter i."""
        return [m for m, letter in enumerate(self.word) if letter == i]

    def require_letter(self, i: int) -> list[int]:
        found = self.positions(i)
        if not found:
            raise DomainError(
                f"Index {i} does not occur in the word of chart {self.name}",
                details={"word": self.word},
            )
        return found

    def variable_names(self) -> tuple[str, ...]:
        """Chart coordinates in table order (x0..x5 or y0..y5)."""
        return tuple(n for n in self.table.names if n in self.coords)


W1 = CrystalChart(
    name="w1",
    word=(0, 1, 2, 1, 2, 1),
    coords=("x0", "x1", "x2", "x3", "x4", "x5"),
    table=X_TABLE,
    seed=BasisVector.B1,
)

W2 = CrystalChart(
    name="w2",
    word=(2, 1, 2, 1, 0, 1),
    coords=("y2", "y1", "y4", "y3", "y0", "y5"),
    table=Y_TABLE,
    seed=BasisVector.BAR2,
)

CHARTS = {W1.name: W1, W2.name: W2}

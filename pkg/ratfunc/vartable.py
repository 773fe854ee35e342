"""
Ordered variable tables.

Every polynomial carries the table it was built over; exponent vectors are
indexed by table position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from utils.errors import StructuralError


@dataclass(frozen=True)
class VarTable:
    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise StructuralError(
                "Variable names must be unique", details={"names": ",".join(self.names)}
            )
        object.__setattr__(self, "_index", {n: k for k, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(
                f"Variable {name!r} is not in the table",
                details={"names": ",".join(self.names)},
            ) from None

    def unit_vector(self, name: str, power: int = 1) -> tuple[int, ...]:
        exp = [0] * len(self.names)
        exp[self.index(name)] = power
        return tuple(exp)

    def zero_vector(self) -> tuple[int, ...]:
        return (0,) * len(self.names)

    def require_same(self, other: VarTable) -> None:
        if self.names != other.names:
            raise StructuralError(
                "Variable table mismatch",
                details={"left": ",".join(self.names), "right": ",".join(other.names)},
            )


X_TABLE = VarTable(("x0", "x1", "x2", "x3", "x4", "x5", "c"))
Y_TABLE = VarTable(("y0", "y1", "y2", "y3", "y4", "y5", "c"))

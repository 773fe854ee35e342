"""
Cartan data and classical weights.

Weights are integer triples (l0, l1, l2) of coefficients of the fundamental
weights Lambda_0, Lambda_1, Lambda_2; the null root is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from g2module.basis import BASIS, BasisVector

INDICES = (0, 1, 2)

# a[i][j], rows and columns indexed by 0, 1, 2
CARTAN_ROWS: tuple[tuple[int, ...], ...] = (
    (2, -1, 0),
    (-1, 2, -1),
    (0, -3, 2),
)
CARTAN = np.array(CARTAN_ROWS, dtype=np.int64)


@dataclass(frozen=True)
class Weight:
    l0: int = 0
    l1: int = 0
    l2: int = 0

    @classmethod
    def of(cls, coeffs) -> Weight:
        l0, l1, l2 = (int(v) for v in coeffs)
        return cls(l0, l1, l2)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.l0, self.l1, self.l2)

    def __add__(self, other: Weight) -> Weight:
        return Weight.of(a + b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __sub__(self, other: Weight) -> Weight:
        return Weight.of(a - b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __neg__(self) -> Weight:
        return Weight.of(-a for a in self.as_tuple())

    def __str__(self) -> str:
        parts = [
            f"{'+' if v > 0 else '-'}{abs(v) if abs(v) != 1 else ''}L{k}"
            for k, v in enumerate(self.as_tuple())
            if v
        ]
        text = "".join(parts) or "0"
        return text[1:] if text.startswith("+") else text


# cl(alpha_j) = sum_i a_ij Lambda_i, i.e. column j of the Cartan matrix
SIMPLE_ROOTS: dict[int, Weight] = {
    j: Weight.of(CARTAN[:, j]) for j in INDICES
}

_UNBARRED = {
    BasisVector.B1: Weight(-2, 1, 0),
    BasisVector.B2: Weight(-1, -1, 3),
    BasisVector.B3: Weight(-1, 0, 1),
    BasisVector.B4: Weight(-1, 1, -1),
    BasisVector.B5: Weight(0, -1, 2),
    BasisVector.B6: Weight(-1, 2, -3),
}

WEIGHTS: dict[BasisVector, Weight] = {}
for _b in BASIS:
    if _b in _UNBARRED:
        WEIGHTS[_b] = _UNBARRED[_b]
    elif _b.partner is not None:
        WEIGHTS[_b] = -_UNBARRED[_b.partner]
    else:
        WEIGHTS[_b] = Weight()


def weight_of(b: BasisVector) -> Weight:
    return WEIGHTS[b]


def coroot_pairing(i: int, w: Weight) -> int:
    """<alpha_i^vee, w>: the Lambda_i coefficient."""
    return w.as_tuple()[i]


def cartan_entry(i: int, j: int) -> int:
    return CARTAN_ROWS[i][j]

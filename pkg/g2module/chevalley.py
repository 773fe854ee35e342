"""
Chevalley generators e_i, f_i on the 15-dimensional module.

The tables list every nonzero action b -> k * b'. Anything not listed acts
by zero.
"""

from __future__ import annotations

import json
import logging
from enum import Enum
from functools import lru_cache

import numpy as np

from g2module.basis import BASIS, DIM, BasisVector
from g2module.weights import INDICES

logger = logging.getLogger(__name__)

B = BasisVector


class Generator(str, Enum):
    E = "e"
    F = "f"


Action = dict[BasisVector, tuple[BasisVector, int]]

CHEVALLEY_TABLES: dict[tuple[Generator, int], Action] = {
    (Generator.F, 0): {
        B.ZERO2: (B.B1, 1),
        B.BAR6: (B.B2, 1),
        B.BAR4: (B.B3, 1),
        B.BAR3: (B.B4, 1),
        B.BAR2: (B.B6, 1),
        B.BAR1: (B.EMPTY, 1),
        B.EMPTY: (B.B1, 2),
    },
    (Generator.E, 0): {
        B.B1: (B.EMPTY, 1),
        B.B2: (B.BAR6, 1),
        B.B3: (B.BAR4, 1),
        B.B4: (B.BAR3, 1),
        B.B6: (B.BAR2, 1),
        B.ZERO2: (B.BAR1, 1),
        B.EMPTY: (B.BAR1, 2),
    },
    (Generator.F, 1): {
        B.B1: (B.B2, 1),
        B.B4: (B.B5, 1),
        B.B6: (B.ZERO2, 1),
        B.ZERO1: (B.BAR6, 3),
        B.ZERO2: (B.BAR6, 2),
        B.BAR5: (B.BAR4, 1),
        B.BAR2: (B.BAR1, 1),
        B.EMPTY: (B.BAR6, 1),
    },
    (Generator.E, 1): {
        B.B2: (B.B1, 1),
        B.B5: (B.B4, 1),
        B.ZERO1: (B.B6, 3),
        B.ZERO2: (B.B6, 2),
        B.BAR6: (B.ZERO2, 1),
        B.BAR4: (B.BAR5, 1),
        B.BAR1: (B.BAR2, 1),
        B.EMPTY: (B.B6, 1),
    },
    (Generator.F, 2): {
        B.B2: (B.B3, 1),
        B.B3: (B.B4, 2),
        B.B4: (B.B6, 3),
        B.B5: (B.ZERO1, 1),
        B.ZERO1: (B.BAR5, 2),
        B.ZERO2: (B.BAR5, 1),
        B.BAR6: (B.BAR4, 1),
        B.BAR4: (B.BAR3, 2),
        B.BAR3: (B.BAR2, 3),
    },
    (Generator.E, 2): {
        B.B3: (B.B2, 3),
        B.B4: (B.B3, 2),
        B.B6: (B.B4, 1),
        B.ZERO1: (B.B5, 2),
        B.ZERO2: (B.B5, 1),
        B.BAR5: (B.ZERO1, 1),
        B.BAR4: (B.BAR6, 3),
        B.BAR3: (B.BAR4, 2),
        B.BAR2: (B.BAR3, 1),
    },
}

# largest k with gen_i^k != 0, so exp(f_i / c) truncates after it
NILPOTENCY_DEGREE = {0: 2, 1: 2, 2: 3}


def apply_chevalley(gen: Generator | str, i: int, b: BasisVector) -> list[tuple[BasisVector, int]]:
    action = CHEVALLEY_TABLES[(Generator(gen), i)].get(b)
    return [action] if action is not None else []


@lru_cache(maxsize=None)
def _matrix(gen: Generator, i: int) -> np.ndarray:
    m = np.zeros((DIM, DIM), dtype=np.int64)
    for src, (dst, k) in CHEVALLEY_TABLES[(gen, i)].items():
        m[dst.index, src.index] = k
    m.setflags(write=False)
    return m


def generator_matrix(gen: Generator | str, i: int) -> np.ndarray:
    """15x15 integer matrix; column k is the image of basis vector k."""
    return _matrix(Generator(gen), i)


def generator_names() -> list[str]:
    return [f"{g.value}{i}" for g in Generator for i in INDICES]


def dump_matrices() -> dict[str, list[list[int]]]:
    return {
        f"{g.value}{i}": generator_matrix(g, i).tolist()
        for g in Generator
        for i in INDICES
    }


def dump_matrices_json(indent: int | None = 2) -> str:
    payload = {
        "basis": [b.value for b in BASIS],
        "matrices": dump_matrices(),
    }
    return json.dumps(payload, indent=indent, sort_keys=True) + "\n"

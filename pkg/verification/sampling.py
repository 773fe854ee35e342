"""
Seeded sample generation and the worker pool for pointwise checks.

Every check draws from its own stream, derived from the global seed and the
check name, so adding a check never shifts the points of another.
"""

from __future__ import annotations

import logging
import zlib
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def stream(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, zlib.crc32(name.encode("utf-8"))])


def positive_points(
    names: Sequence[str], count: int, seed: int, bound: int, stream_name: str = ""
) -> list[dict[str, Fraction]]:
    """Points with coordinates p/q, 1 <= p, q <= bound."""
    rng = stream(seed, stream_name)
    draws = rng.integers(1, bound, size=(count, len(names), 2), endpoint=True)
    return [
        {name: Fraction(int(p), int(q)) for name, (p, q) in zip(names, row)}
        for row in draws
    ]


def positive_rationals(count: int, seed: int, bound: int, stream_name: str = "") -> list[Fraction]:
    rng = stream(seed, stream_name)
    draws = rng.integers(1, bound, size=(count, 2), endpoint=True)
    return [Fraction(int(p), int(q)) for p, q in draws]


def integer_points(
    dim: int, count: int, seed: int, bound: int, stream_name: str = ""
) -> list[tuple[int, ...]]:
    """Integer vectors uniform in [-bound, bound]^dim."""
    rng = stream(seed, stream_name)
    draws = rng.integers(-bound, bound, size=(count, dim), endpoint=True)
    return [tuple(int(v) for v in row) for row in draws]


def run_samples(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Map fn over items; results are in item order whatever the pool size."""
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug(f"Evaluating {len(items)} samples on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


def format_point(point: dict[str, Any]) -> dict[str, str]:
    return {k: str(v) for k, v in sorted(point.items())}

"""
The one-parameter elements Y_i(c) = exp(f_i / c) alpha_i^vee(c) on the module,
and the chart vectors v(x) = Y_{i_1}(x_1) ... Y_{i_k}(x_k) . seed.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from functools import lru_cache
from typing import Any

from g2module.basis import BASIS, BasisVector
from g2module.chevalley import NILPOTENCY_DEGREE, Generator
from g2module.module_vector import ModuleVector
from g2module.weights import coroot_pairing, weight_of
from geomcrystal.charts import CrystalChart
from ratfunc.rational import RationalFunction

logger = logging.getLogger(__name__)


def torus_act(i: int, c: Any, v: ModuleVector) -> ModuleVector:
    """alpha_i^vee(c): scale the b-coefficient by c^<alpha_i^vee, wt b>."""

    def scale(b: BasisVector, value: Any) -> Any:
        k = coroot_pairing(i, weight_of(b))
        return value * c**k if k else value

    return v.map_coefficients(scale)


def apply_y(i: int, c: Any, v: ModuleVector) -> ModuleVector:
    w = torus_act(i, c, v)
    result = w
    term = w
    for k in range(1, NILPOTENCY_DEGREE[i] + 1):
        term = term.apply_generator(Generator.F, i).scale(1 / (c * k))
        if term.is_zero():
            break
        result = result + term
    return result


def y_matrix(i: int, c: Any) -> list[list[Any]]:
    """Y_i(c) as a 15x15 matrix; column k is the image of basis vector k."""
    columns = [apply_y(i, c, ModuleVector.basis(b)).to_list() for b in BASIS]
    return [list(row) for row in zip(*columns)]


def build_v(chart: CrystalChart, values: Mapping[str, Any] | None = None) -> ModuleVector:
    """v over the chart: symbolic when values is None, else at the given point."""
    if values is None:
        values = {n: RationalFunction.variable(chart.table, n) for n in chart.coords}
    v = ModuleVector.basis(chart.seed)
    for i, name in reversed(list(zip(chart.word, chart.coords))):
        v = apply_y(i, values[name], v)
    return v


@lru_cache(maxsize=None)
def symbolic_coefficients(chart: CrystalChart) -> tuple[RationalFunction, ...]:
    """The 15 coefficients of the symbolic chart vector, in basis order."""
    v = build_v(chart)
    coeffs = tuple(RationalFunction.from_value(chart.table, value) for value in v.to_list())
    logger.debug(
        f"Chart {chart.name}: {sum(c.term_count() for c in coeffs)} terms over 15 coefficients"
    )
    return coeffs

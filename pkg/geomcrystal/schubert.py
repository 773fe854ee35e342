"""
The geometric crystal structure on Y_{i_1}(c_1) ... Y_{i_k}(c_k).

With t_m = 1 / (c_1^{a(i_1,i)} ... c_{m-1}^{a(i_{m-1},i)} c_m) for the
positions m carrying letter i:

    eps_i   = sum of t_m
    gamma_i = prod over all positions of c_m^{a(i_m,i)}
    e_i^c   multiplies c_j by
              (sum_{m<=j} c t_m + sum_{m>j} t_m) / (sum_{m<j} c t_m + sum_{m>=j} t_m)

Positions without letter i keep their coordinate. All functions are generic
in the coefficient type.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import reduce
from operator import add
from typing import Any

from g2module.weights import cartan_entry
from geomcrystal.charts import CrystalChart


def _coords(chart: CrystalChart, values: Mapping[str, Any]) -> list[Any]:
    return [values[name] for name in chart.coords]


def schubert_terms(chart: CrystalChart, i: int, values: Mapping[str, Any]) -> dict[int, Any]:
    """t_m for every position m carrying letter i."""
    positions = chart.require_letter(i)
    coords = _coords(chart, values)
    terms: dict[int, Any] = {}
    for m in positions:
        prefix = coords[m]
        for letter, value in zip(chart.word[:m], coords[:m]):
            k = cartan_entry(letter, i)
            if k:
                prefix = prefix * value**k
        terms[m] = 1 / prefix
    return terms


def schubert_eps(chart: CrystalChart, i: int, values: Mapping[str, Any]) -> Any:
    return reduce(add, schubert_terms(chart, i, values).values())


def schubert_gamma(chart: CrystalChart, i: int, values: Mapping[str, Any]) -> Any:
    result: Any = 1
    for letter, value in zip(chart.word, _coords(chart, values)):
        k = cartan_entry(letter, i)
        if k:
            result = result * value**k
    return result


def schubert_multipliers(chart: CrystalChart, i: int, c: Any, values: Mapping[str, Any]) -> dict[int, Any]:
    """The factor C_j / c_j for each position j carrying letter i."""
    terms = schubert_terms(chart, i, values)
    multipliers: dict[int, Any] = {}
    for j in terms:
        num = reduce(add, (c * t if m <= j else t for m, t in terms.items()))
        den = reduce(add, (c * t if m < j else t for m, t in terms.items()))
        multipliers[j] = num / den
    return multipliers


def schubert_action(chart: CrystalChart, i: int, c: Any, values: Mapping[str, Any]) -> dict[str, Any]:
    """New chart coordinates after e_i^c, keyed by coordinate name."""
    multipliers = schubert_multipliers(chart, i, c, values)
    coords = _coords(chart, values)
    return {
        name: coords[m] * multipliers[m] if m in multipliers else coords[m]
        for m, name in enumerate(chart.coords)
    }

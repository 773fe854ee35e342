"""
Crystal operators on the w1 chart.

Two forms are available for every index: the explicit closed forms, and the
general ones (the Schubert formulas on w1 for i = 1, 2; conjugation through
the birational map to w2 for i = 0).
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from enum import Enum
from typing import Any

from geomcrystal import formulas as fm
from geomcrystal.charts import W1, W2
from geomcrystal.schubert import schubert_action, schubert_eps, schubert_gamma
from geomcrystal.sigma import X_NAMES, sigma, sigma_inv

logger = logging.getLogger(__name__)

Point = Mapping[str, Any]


class OperatorForm(str, Enum):
    EXPLICIT = "explicit"
    GENERAL = "general"


def _xs(x: Point) -> tuple[Any, ...]:
    return tuple(x[n] for n in X_NAMES)


def explicit_action(i: int, c: Any, x: Point) -> dict[str, Any]:
    return dict(zip(X_NAMES, fm.E_COORDS[i](*_xs(x), c)))


def explicit_eps(i: int, x: Point) -> Any:
    return fm.EPS[i](*_xs(x))


def explicit_gamma(i: int, x: Point) -> Any:
    return fm.GAMMA[i](*_xs(x))


def explicit_operators(i: int, c: Any, x: Point) -> tuple[dict[str, Any], Any, Any]:
    """e_i^c x together with eps_i(x) and gamma_i(x)."""
    return explicit_action(i, c, x), explicit_eps(i, x), explicit_gamma(i, x)


def e0_via_sigma(c: Any, x: Point) -> dict[str, Any]:
    """Conjugate e0^c on the w2 chart back to w1."""
    y = sigma(x)
    return sigma_inv(schubert_action(W2, 0, c, y))


def general_action(i: int, c: Any, x: Point) -> dict[str, Any]:
    if i == 0:
        return e0_via_sigma(c, x)
    moved = schubert_action(W1, i, c, x)
    return {n: moved[n] for n in X_NAMES}


def general_eps(i: int, x: Point) -> Any:
    if i == 0:
        return schubert_eps(W2, 0, sigma(x))
    return schubert_eps(W1, i, x)


def general_gamma(i: int, x: Point) -> Any:
    if i == 0:
        return schubert_gamma(W2, 0, sigma(x))
    return schubert_gamma(W1, i, x)


class GeometricCrystal:
    """The affine geometric crystal on the w1 chart."""

    def __init__(self, form: OperatorForm | str = OperatorForm.EXPLICIT) -> None:
        self.form = OperatorForm(form)

    def e(self, i: int, c: Any, x: Point) -> dict[str, Any]:
        if self.form is OperatorForm.EXPLICIT:
            return explicit_action(i, c, x)
        return general_action(i, c, x)

    def eps(self, i: int, x: Point) -> Any:
        if self.form is OperatorForm.EXPLICIT:
            return explicit_eps(i, x)
        return general_eps(i, x)

    def gamma(self, i: int, x: Point) -> Any:
        if self.form is OperatorForm.EXPLICIT:
            return explicit_gamma(i, x)
        return general_gamma(i, x)

    def phi(self, i: int, x: Point) -> Any:
        return self.eps(i, x) * self.gamma(i, x)

    def compose(self, steps: list[tuple[int, Any]], x: Point) -> dict[str, Any]:
        """Apply e_{i_1}^{c_1} ... e_{i_n}^{c_n}; the rightmost step acts first."""
        current = dict(x)
        for i, c in reversed(steps):
            current = self.e(i, c, current)
        return current

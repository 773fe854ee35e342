"""The affine geometric crystal on the w1 chart, its birational map to w2, and their checks."""

from geomcrystal.charts import CHARTS, W1, W2, CrystalChart
from geomcrystal.formulas import FORMULAS, NamedFormula, get_formula, tropical_targets
from geomcrystal.group import apply_y, build_v, torus_act, y_matrix
from geomcrystal.operators import (
    GeometricCrystal,
    OperatorForm,
    e0_via_sigma,
    explicit_operators,
)
from geomcrystal.schubert import schubert_action, schubert_eps, schubert_gamma
from geomcrystal.sigma import sigma, sigma_inv, sigma_symbolic

__all__ = [
    "CHARTS",
    "FORMULAS",
    "W1",
    "W2",
    "CrystalChart",
    "GeometricCrystal",
    "NamedFormula",
    "OperatorForm",
    "apply_y",
    "build_v",
    "e0_via_sigma",
    "explicit_operators",
    "get_formula",
    "schubert_action",
    "schubert_eps",
    "schubert_gamma",
    "sigma",
    "sigma_inv",
    "sigma_symbolic",
    "torus_act",
    "tropical_targets",
    "y_matrix",
]

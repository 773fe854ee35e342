"""Ultra-discretization: max-plus maps, the valuation oracle and the UD crystal on Z^6."""

from tropical.graph import CrystalGraph, Edge, explore_crystal_graph
from tropical.polynomial import (
    AffineForm,
    PiecewiseLinearMap,
    TropicalPolynomial,
    TropicalRatio,
    tropicalize,
)
from tropical.ud_crystal import (
    UDCrystal,
    check_trop_vs_oracle,
    check_ud_crystal_axioms,
    trop_suite,
    tropical_form,
    ud_crystal,
    udcrystal_suite,
)
from tropical.valuation import valuation_oracle

__all__ = [
    "AffineForm",
    "CrystalGraph",
    "Edge",
    "PiecewiseLinearMap",
    "TropicalPolynomial",
    "TropicalRatio",
    "UDCrystal",
    "check_trop_vs_oracle",
    "check_ud_crystal_axioms",
    "explore_crystal_graph",
    "trop_suite",
    "tropical_form",
    "tropicalize",
    "ud_crystal",
    "udcrystal_suite",
    "valuation_oracle",
]

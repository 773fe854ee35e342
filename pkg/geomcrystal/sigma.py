"""
The birational map from the w1 chart to the w2 chart solving
v2(y) = a(x) v1(x), and its inverse.

The coordinates are computed in dependency order y2, y4, y0, y1, y3, y5. The
last one comes from the 0_2 component of the defining equation, which is
linear in y5:

    y1 + (y3 + y1 y3^2 / y4^3) y5 = a(x) X_{0_2}(x)

The printed closed fraction for y5 is kept as a candidate; it misses the
factor a(x).
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache, partial
from typing import Any

from g2module.basis import BASIS
from geomcrystal import formulas as fm
from geomcrystal.charts import W1, W2
from geomcrystal.group import build_v
from ratfunc.factored import FactoredRational
from ratfunc.vartable import X_TABLE, Y_TABLE
from utils.errors import EvaluationError
from verification.identity import IdentityChecker
from verification.report import Finding, VerificationReport

logger = logging.getLogger(__name__)

X_NAMES = ("x0", "x1", "x2", "x3", "x4", "x5")
Y_NAMES = ("y0", "y1", "y2", "y3", "y4", "y5")


def _xs(x: Mapping[str, Any]) -> tuple[Any, ...]:
    return tuple(x[n] for n in X_NAMES)


def _ys(y: Mapping[str, Any]) -> tuple[Any, ...]:
    return tuple(y[n] for n in Y_NAMES)


def sigma_core(x: Mapping[str, Any]) -> dict[str, Any]:
    """y0..y4 together with a(x); shared by every y5 variant."""
    xs = _xs(x)
    m = fm.M(*xs)
    a = m / (xs[2] * xs[4]) ** 2
    y2 = fm.y2_of(*xs)
    y4 = m / (y2 * xs[2] * xs[4])
    y0 = a * xs[0]
    a_x1 = a * fm.X1(*xs)
    y1 = y2**3 * (a_x1 + y4**3) / (a * fm.X2(*xs))
    y3 = a_x1 / y1
    return {"a": a, "M": m, "y0": y0, "y1": y1, "y2": y2, "y3": y3, "y4": y4}


def y5_solved(x: Mapping[str, Any], core: Mapping[str, Any]) -> Any:
    y1, y3, y4 = core["y1"], core["y3"], core["y4"]
    return (core["a"] * fm.X0_2(*_xs(x)) - y1) / (y3 + y1 * y3**2 / y4**3)


def y5_printed(x: Mapping[str, Any], core: Mapping[str, Any]) -> Any:
    xs = _xs(x)
    y1, y3, y4, a = core["y1"], core["y3"], core["y4"], core["a"]
    x0, x1, x2, x3, x4, x5 = xs
    top = x5 * core["M"] * fm.N(*xs) / (x1 * x2 * x3 * x4)
    return top / (a * fm.X2(*xs) * (y3 + y1 * y3**2 / y4**3))


def y5_rescaled(x: Mapping[str, Any], core: Mapping[str, Any]) -> Any:
    """The printed fraction multiplied by a(x)."""
    return core["a"] * y5_printed(x, core)


def y5_closed(x: Mapping[str, Any], core: Mapping[str, Any]) -> Any:
    """a(x) x1 x3 x5 / X1(x), the value that makes gamma0 pull back to x0^2/(x1 x3 x5)."""
    xs = _xs(x)
    return core["a"] * xs[1] * xs[3] * xs[5] / fm.X1(*xs)


Y5_CANDIDATES = {
    "solved": y5_solved,
    "printed": y5_printed,
    "rescaled": y5_rescaled,
    "closed": y5_closed,
}


def sigma(x: Mapping[str, Any], y5_variant: str = "solved") -> dict[str, Any]:
    """y-coordinates of the image of x; generic in the coefficient type."""
    core = sigma_core(x)
    y = {n: core[n] for n in ("y0", "y1", "y2", "y3", "y4")}
    y["y5"] = Y5_CANDIDATES[y5_variant](x, core)
    return y


def sigma_with_scalar(x: Mapping[str, Any]) -> tuple[dict[str, Any], Any]:
    core = sigma_core(x)
    y = {n: core[n] for n in ("y0", "y1", "y2", "y3", "y4")}
    y["y5"] = y5_solved(x, core)
    return y, core["a"]


def sigma_inv(y: Mapping[str, Any]) -> dict[str, Any]:
    ys = _ys(y)
    y0, y1, y2, y3, y4, y5 = ys
    y1b = fm.Y1b(*ys)
    y2b = fm.Y2b(*ys)
    y3b = fm.Y3b(*ys)
    x0 = y1b / y0
    x1 = y2b / y0
    x2 = y3b / y0
    x4 = y2 * y4 * y1b / (y0 * y3b)
    x3 = fm.P(*ys) * y1b / (y0**2 * y2b)
    bracket = (
        1
        + y1 / y0
        + y3 * y5 / y0
        + y1 * y3 * y5 / y0**2
        + y1 * y3**2 * y5 / (y0 * y4**3)
    )
    x5 = y5 * y1b * bracket / (y0**2 * x1 * x3)
    return {"x0": x0, "x1": x1, "x2": x2, "x3": x3, "x4": x4, "x5": x5}


@lru_cache(maxsize=1)
def sigma_symbolic() -> dict[str, FactoredRational]:
    """The map as factored rational functions of x0..x5."""
    x = {n: FactoredRational.variable(X_TABLE, n) for n in X_NAMES}
    y = sigma(x)
    for n, value in y.items():
        logger.debug(f"sigma {n}: {len(value.factors)} factors, ~{value.estimated_terms()} terms")
    return y


def symbolic_substitution() -> dict[str, FactoredRational]:
    """y-table substitution onto x: the six coordinates plus c -> c."""
    subst = dict(sigma_symbolic())
    subst["c"] = FactoredRational.variable(X_TABLE, "c")
    return subst


# pointwise checks; top level so that worker processes can unpickle them


def _defining_equation_at(x: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    try:
        y, scale = sigma_with_scalar(x)
        left = build_v(W2, y).to_list()
    except (ZeroDivisionError, EvaluationError) as e:
        return False, f"error: {e}", "-"
    right = [scale * value for value in build_v(W1, x).to_list()]
    if left == right:
        return True, "", ""
    bad = [b.label for b, l, r in zip(BASIS, left, right) if l != r]
    return False, f"components {','.join(bad)}: {[str(v) for v in left]}", str([str(v) for v in right])


def _inverse_at(x: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    try:
        back = sigma_inv(sigma(x))
    except ZeroDivisionError as e:
        return False, f"error: {e}", "-"
    ok = all(back[n] == x[n] for n in X_NAMES)
    return ok, str([str(back[n]) for n in X_NAMES]), str([str(x[n]) for n in X_NAMES])


def _image_roundtrip_at(x: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    y = sigma(x)
    try:
        again = sigma(sigma_inv(y))
    except ZeroDivisionError as e:
        return False, f"error: {e}", "-"
    ok = all(again[n] == y[n] for n in Y_NAMES)
    return ok, str([str(again[n]) for n in Y_NAMES]), str([str(y[n]) for n in Y_NAMES])


def _y5_candidate_at(variant: str, x: dict[str, Fraction]) -> tuple[bool, Any, Any]:
    core = sigma_core(x)
    y5 = Y5_CANDIDATES[variant](x, core)
    ys = (core["y0"], core["y1"], core["y2"], core["y3"], core["y4"], y5)
    left = fm.Y0_2(*ys)
    right = core["a"] * fm.X0_2(*_xs(x))
    return left == right, left, right


def check_defining_equation(checker: IdentityChecker, samples: int | None = None) -> VerificationReport:
    points = checker.points(X_NAMES, "sigma.defining_equation", samples)
    return checker.check_points("sigma.defining_equation", _defining_equation_at, points)


def check_inverse(checker: IdentityChecker, samples: int | None = None) -> list[VerificationReport]:
    points = checker.points(X_NAMES, "sigma.inverse", samples)
    return [
        checker.check_points("sigma.inverse", _inverse_at, points),
        checker.check_points("sigma.image_roundtrip", _image_roundtrip_at, points),
    ]


def check_y5_candidates(
    checker: IdentityChecker, samples: int | None = None
) -> tuple[list[VerificationReport], Finding]:
    """Every y5 candidate against the 0_2 component; the printed one is informational."""
    points = checker.points(X_NAMES, "sigma.y5", samples)
    reports = []
    for variant in Y5_CANDIDATES:
        reports.append(
            checker.check_points(
                f"sigma.y5.{variant}",
                partial(_y5_candidate_at, variant),
                points,
                informational=variant != "solved",
            )
        )
    ones = {n: Fraction(1) for n in X_NAMES}
    core = sigma_core(ones)
    solved = y5_solved(ones, core)
    printed = y5_printed(ones, core)
    outcome = {r.identity.rsplit(".", 1)[1]: "pass" if r.passed else "fail" for r in reports}
    finding = Finding(
        key="sigma.y5",
        summary=(
            "The printed y5 fraction does not satisfy the defining equation; "
            "it is off by exactly the factor a(x). The solved coordinate is used."
        ),
        details={
            "solved_at_ones": str(solved),
            "printed_at_ones": str(printed),
            "ratio_at_ones": str(solved / printed),
            "a_at_ones": str(core["a"]),
            **{f"{k}_candidate": v for k, v in sorted(outcome.items())},
        },
    )
    if outcome.get("printed") == "fail":
        logger.warning(
            f"Printed y5 differs from the solved coordinate (ratio {solved / printed} at x = 1)"
        )
    return reports, finding

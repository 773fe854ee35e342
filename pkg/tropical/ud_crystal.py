"""
The ultra-discretized crystal on Z^6.

Every structure map is the tropicalization of the corresponding positive
rational function on the w1 chart: e~_i is e_i^c at c = t, f~_i at c = t^-1,
wt_i comes from gamma_i and eps_i from eps_i. The operators are total (free
pre-crystal).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache, partial
from typing import Any

from g2module.weights import INDICES
from geomcrystal.checks import Convention, resolve_convention
from geomcrystal.formulas import get_formula, tropical_targets
from geomcrystal.sigma import X_NAMES
from ratfunc.rational import RationalFunction
from ratfunc.vartable import X_TABLE
from tropical.polynomial import PiecewiseLinearMap, TropicalRatio, tropicalize
from tropical.valuation import valuation_oracle
from utils.errors import UndefinedValuationError
from verification.identity import IdentityChecker
from verification.report import SuiteReport, VerificationReport
from verification.sampling import integer_points

logger = logging.getLogger(__name__)

UDPoint = tuple[int, ...]


def _slot(xi: Sequence[int], n: int = 0) -> tuple[int, ...]:
    """The cocharacter with the parameter exponent appended."""
    return (*xi, n)


class UDCrystal:
    def __init__(self) -> None:
        self.operators: dict[int, PiecewiseLinearMap] = {
            i: PiecewiseLinearMap.from_functions(
                X_TABLE, {n: get_formula(f"e{i}_{n}").body for n in X_NAMES}
            )
            for i in INDICES
        }
        self.weights: dict[int, TropicalRatio] = {
            i: tropicalize(get_formula(f"gamma{i}").body) for i in INDICES
        }
        self.epsilons: dict[int, TropicalRatio] = {
            i: tropicalize(get_formula(f"eps{i}").body) for i in INDICES
        }
        self.phis: dict[int, TropicalRatio] = {
            i: tropicalize(get_formula(f"eps{i}").body * get_formula(f"gamma{i}").body)
            for i in INDICES
        }

    def operator(self, i: int, n: int, xi: Sequence[int]) -> UDPoint:
        if n == 0:
            return tuple(xi)
        moved = self.operators[i].evaluate(_slot(xi, n))
        return tuple(moved[name] for name in X_NAMES)

    def e(self, i: int, xi: Sequence[int]) -> UDPoint:
        return self.operator(i, 1, xi)

    def f(self, i: int, xi: Sequence[int]) -> UDPoint:
        return self.operator(i, -1, xi)

    def wt(self, j: int, xi: Sequence[int]) -> int:
        return self.weights[j].evaluate(_slot(xi))

    def eps(self, i: int, xi: Sequence[int]) -> int:
        return self.epsilons[i].evaluate(_slot(xi))

    def phi(self, i: int, xi: Sequence[int]) -> int:
        return self.eps(i, xi) + self.wt(i, xi)

    def phi_tropical(self, i: int, xi: Sequence[int]) -> int:
        """Tropicalization of the product eps_i gamma_i, for comparison with phi."""
        return self.phis[i].evaluate(_slot(xi))

    def weight_vector(self, xi: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.wt(j, xi) for j in INDICES)


@lru_cache(maxsize=1)
def ud_crystal() -> UDCrystal:
    logger.debug("Tropicalizing the structure maps")
    return UDCrystal()


@lru_cache(maxsize=1)
def _target_bodies() -> dict[str, RationalFunction]:
    return {f.name: f.body for f in tropical_targets()}


@lru_cache(maxsize=None)
def _target_map(name: str) -> TropicalRatio:
    return tropicalize(_target_bodies()[name])


def _cocharacter(point: dict[str, Any]) -> tuple[int, ...]:
    return tuple(int(point[n]) for n in X_TABLE.names)


def _oracle_at(name: str, point: dict[str, Any]) -> tuple[bool, Any, Any]:
    xi = _cocharacter(point)
    tropical = _target_map(name).evaluate(xi)
    try:
        oracle = valuation_oracle(_target_bodies()[name], xi)
    except UndefinedValuationError as e:
        return False, tropical, f"undefined: {e}"
    return tropical == oracle, tropical, oracle


def _sweep(count: int, seed: int, bound: int, n_bound: int, stream_name: str) -> list[dict[str, int]]:
    xis = integer_points(len(X_NAMES), count, seed, bound, stream_name)
    ns = integer_points(1, count, seed, n_bound, f"{stream_name}.n")
    return [{**dict(zip(X_NAMES, xi)), "c": n} for xi, (n,) in zip(xis, ns)]


def check_trop_vs_oracle(
    checker: IdentityChecker, samples: int | None = None, bound: int = 5, n_bound: int = 3
) -> list[VerificationReport]:
    """Tropical evaluation against the exact valuation, one report per target."""
    points = _sweep(checker.samples if samples is None else samples, checker.seed, bound, n_bound, "trop.oracle")
    reports = []
    for target in tropical_targets():
        logger.debug(f"Oracle sweep for {target.name}")
        reports.append(
            checker.check_points(
                f"trop.oracle.{target.name}",
                partial(_oracle_at, target.name),
                points,
                notes=[f"xi in [-{bound},{bound}]^6, n in [-{n_bound},{n_bound}]"],
            )
        )
    return reports


# crystal axioms at integer points; the convention is passed as its value so
# that partials stay picklable


def _split(point: dict[str, Any]) -> tuple[UDPoint, int, int]:
    return tuple(int(point[n]) for n in X_NAMES), int(point["n"]), int(point["m"])


def _additivity_at(point: dict[str, Any]) -> tuple[bool, Any, Any]:
    ud = ud_crystal()
    xi, n, m = _split(point)
    for i in INDICES:
        left = ud.operator(i, m, ud.operator(i, n, xi))
        right = ud.operator(i, m + n, xi)
        if left != right:
            return False, f"i={i}: {left}", str(right)
        if ud.operator(i, 0, xi) != xi:
            return False, f"i={i}: n=0 moved the point", str(xi)
    return True, "", ""


def _weight_shift_at(convention: str, point: dict[str, Any]) -> tuple[bool, Any, Any]:
    ud = ud_crystal()
    conv = Convention(convention)
    xi, n, _ = _split(point)
    for i in INDICES:
        moved = ud.operator(i, n, xi)
        for j in INDICES:
            shift = ud.wt(j, moved) - ud.wt(j, xi)
            expected = n * conv.exponent(i, j)
            if shift != expected:
                return False, f"i={i} j={j} n={n}: shift {shift}", expected
    return True, "", ""


def _eps_decrement_at(point: dict[str, Any]) -> tuple[bool, Any, Any]:
    ud = ud_crystal()
    xi, _, _ = _split(point)
    for i in INDICES:
        before = ud.eps(i, xi)
        after_e = ud.eps(i, ud.e(i, xi))
        after_f = ud.eps(i, ud.f(i, xi))
        if (after_e, after_f) != (before - 1, before + 1):
            return False, f"i={i}: eps {before} -> e {after_e}, f {after_f}", f"{before - 1}, {before + 1}"
    return True, "", ""


def _phi_at(point: dict[str, Any]) -> tuple[bool, Any, Any]:
    ud = ud_crystal()
    xi, _, _ = _split(point)
    for i in INDICES:
        if ud.phi(i, xi) != ud.phi_tropical(i, xi):
            return False, f"i={i}: eps + wt = {ud.phi(i, xi)}", ud.phi_tropical(i, xi)
    return True, "", ""


def _inverse_at(point: dict[str, Any]) -> tuple[bool, Any, Any]:
    ud = ud_crystal()
    xi, _, _ = _split(point)
    for i in INDICES:
        back = ud.e(i, ud.f(i, xi))
        if back != xi or ud.f(i, ud.e(i, xi)) != xi:
            return False, f"i={i}: {back}", str(xi)
    return True, "", ""


def check_ud_crystal_axioms(
    checker: IdentityChecker, samples: int | None = None, bound: int = 10, n_bound: int = 3
) -> list[VerificationReport]:
    count = checker.samples if samples is None else samples
    xis = integer_points(len(X_NAMES), count, checker.seed, bound, "udcrystal")
    steps = integer_points(2, count, checker.seed, n_bound, "udcrystal.steps")
    points: list[dict[str, Any]] = [
        {**dict(zip(X_NAMES, xi)), "n": n, "m": m} for xi, (n, m) in zip(xis, steps)
    ]
    convention, _ = resolve_convention()
    notes = []
    if convention is None:
        convention = Convention.ACTING_ROW
        notes.append("index convention unresolved; acting_row assumed")
    notes.append(f"index convention: {convention.value}")
    checks = {
        "udcrystal.additivity": _additivity_at,
        "udcrystal.weight_shift": partial(_weight_shift_at, convention.value),
        "udcrystal.eps_decrement": _eps_decrement_at,
        "udcrystal.phi": _phi_at,
        "udcrystal.inverse": _inverse_at,
    }
    return [checker.check_points(name, fn, points, notes=notes) for name, fn in checks.items()]


def trop_suite(checker: IdentityChecker, samples: int | None = None, bound: int = 5, n_bound: int = 3) -> SuiteReport:
    return SuiteReport(suite="trop", reports=check_trop_vs_oracle(checker, samples, bound, n_bound))


def udcrystal_suite(
    checker: IdentityChecker, samples: int | None = None, bound: int = 10, n_bound: int = 3
) -> SuiteReport:
    return SuiteReport(suite="udcrystal", reports=check_ud_crystal_axioms(checker, samples, bound, n_bound))


def tropical_form(name: str) -> PiecewiseLinearMap:
    """Tropicalization of a registered formula, or of all six coordinates for e0, e1, e2."""
    if name in {f"e{i}" for i in INDICES}:
        return ud_crystal().operators[int(name[1])]
    formula = get_formula(name)
    return PiecewiseLinearMap(formula.table, {name: tropicalize(formula.body)})

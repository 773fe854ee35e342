"""
Printed closed forms, transcribed term by term.

Every builder is an ordinary Python function of the table variables in table
order (x0..x5, c or y0..y5, c). Only +, *, / and integer powers are used, so
the same builder evaluates exactly on Fractions, builds a RationalFunction
from variables, or stays factored on FactoredRationals. None of them
subtracts, so bodies built from variables are subtraction-free.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any

from g2module.basis import BASIS, BasisVector
from ratfunc.rational import Positivity, RationalFunction, rf_is_positive
from ratfunc.vartable import X_TABLE, Y_TABLE, VarTable
from utils.errors import UnknownFormulaError

logger = logging.getLogger(__name__)


# coefficients of v1(x)


def X1(x0, x1, x2, x3, x4, x5, c=None):
    return (
        1
        + x3 / x0
        + x1 * x3**2 / (x0 * x2**3)
        + 3 * x1 * x3 * x4 / (x0 * x2**2)
        + 3 * x1 * x4**2 / (x0 * x2)
        + x1 * x4**3 / (x0 * x3)
        + (x1 / x0 + x1 * x3 / x0**2) * x5
    )


def X2(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x2**3 / x1**2
        + x3**2 / x2**3
        + 3 * x3 * x4 / x2**2
        + 3 * x4**2 / x2
        + x4**3 / x3
        + x5
        + x3 * x5 / x0
        + (x0 * x3 * (2 * x3 + 3 * x2 * x4) + x2**3 * (x4**3 + x3 * x5)) / (x0 * x1 * x3)
    )


def X3(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x2**2 / x1
        + x3 / x2
        + x4
        + x2 * x4**2 / x0
        + x2**2 * x4**3 / (x0 * x3)
        + x2**2 * x5 / x0
    )


def X4(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x2
        + x1 * x3 * x4 / (x0 * x2)
        + 2 * x1 * x4**2 / x0
        + x1 * x2 * x4**3 / (x0 * x3)
        + x1 * x2 * x5 / x0
    )


def X5(x0, x1, x2, x3, x4, x5, c=None):
    return (x2**2 / x1 + x3 / x2) * x4 + 2 * x4**2 + x2 * x4**3 / x3 + x2 * x5


def X6(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x1
        + x1**2 * x3**2 / (x0 * x2**3)
        + 3 * x1**2 * x3 * x4 / (x0 * x2**2)
        + 3 * x1**2 * x4**2 / (x0 * x2)
        + x1**2 * x4**3 / (x0 * x3)
        + x1**2 * x5 / x0
    )


def X0_1(x0, x1, x2, x3, x4, x5, c=None):
    return x2 * x4


def X0_2(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x3
        + x1 * x3**2 / x2**3
        + 3 * x1 * x3 * x4 / x2**2
        + 3 * x1 * x4**2 / x2
        + x1 * x4**3 / x3
        + x1 * x5
    )


def X6b(x0, x1, x2, x3, x4, x5, c=None):
    return x0 * (
        x2**3 / x1**2
        + x3**2 / x2**3
        + 3 * x3 * x4 / x2**2
        + 3 * x4**2 / x2
        + x4**3 / x3
        + (2 * x3 + 3 * x2 * x4) / x1
        + x5
    )


def X5b(x0, x1, x2, x3, x4, x5, c=None):
    return x1 * (x3 / x2 + x4)


def X4b(x0, x1, x2, x3, x4, x5, c=None):
    return x0 * (x2**2 / x1 + x3 / x2 + x4)


def X3b(x0, x1, x2, x3, x4, x5, c=None):
    return x0 * x2


def X2b(x0, x1, x2, x3, x4, x5, c=None):
    return x0 * x1


def X1b(x0, x1, x2, x3, x4, x5, c=None):
    return x0**2


def Xempty(x0, x1, x2, x3, x4, x5, c=None):
    return x0


# coefficients of v2(y)


def Y1(y0, y1, y2, y3, y4, y5, c=None):
    return y1 * y3


def Y2(y0, y1, y2, y3, y4, y5, c=None):
    return y2**3 * (y1 * y3 + y4**3) / y1


def Y3(y0, y1, y2, y3, y4, y5, c=None):
    return y2**2 * y3 + y2 * y4**2 + y2**2 * y4**3 / y1


def Y4(y0, y1, y2, y3, y4, y5, c=None):
    return y2 * y3 + y1 * y4 / y2 + 2 * y4**2 + y2 * y4**3 / y1


def Y5(y0, y1, y2, y3, y4, y5, c=None):
    return y2**2 * y4


def Y6(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y3
        + 3 * y1 * y4 / y2**2
        + 3 * y4**2 / y2
        + y4**3 / y1
        + y1**2 * (y4**3 + y3**2 * y5) / (y2**3 * y4**3)
    )


def Y0_1(y0, y1, y2, y3, y4, y5, c=None):
    return y2 * y4


def Y0_2(y0, y1, y2, y3, y4, y5, c=None):
    return y1 + (y3 + y1 * y3**2 / y4**3) * y5


def Y6b(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y2**3
        + y0 * (y2**3 / y1 + y2**3 * y4**3 / (y1**2 * y3))
        + (2 * y2**3 * y3 / y1 + y2**3 * y3**2 / y4**3 + y2**3 * y4**3 / y1**2) * y5
    )


def Y5b(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y1 / y2
        + y4
        + (y3 * (1 / y2 + y1 / (y2**2 * y4)) + y1 * y3**2 / (y2 * y4**3)) * y5
    )


def Y4b(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y2**2
        + y0 * (y2**2 / y1 + y2 * y4**2 / (y1 * y3) + y2**2 * y4**3 / (y1**2 * y3))
        + (
            y3 * (2 * y2**2 / y1 + y2 / y4)
            + y2**2 * y3**2 / y4**3
            + y2 * y4**2 / y1
            + y2**2 * y4**3 / y1**2
        )
        * y5
    )


def Y3b(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y2
        + y0 * (y2 / y1 + y4 / (y2 * y3) + 2 * y4**2 / (y1 * y3) + y2 * y4**3 / (y1**2 * y3))
        + (
            y3 * (2 * y2 / y1 + 2 / y4)
            + y2 * y3**2 / y4**3
            + y4 / y2
            + 2 * y4**2 / y1
            + y2 * y4**3 / y1**2
        )
        * y5
    )


def Y2b(y0, y1, y2, y3, y4, y5, c=None):
    return (
        1
        + y0
        * (
            1 / y1
            + y1 / (y2**3 * y3)
            + 3 * y4 / (y2**2 * y3)
            + 3 * y4**2 / (y1 * y2 * y3)
            + y4**3 / (y1**2 * y3)
        )
        + (
            y1 / y2**3
            + y3 * (2 / y1 + 3 / (y2 * y4))
            + y0 * y1 * y3 / (y2**3 * y4**3)
            + y3**2 / y4**3
            + 3 * y4 / y2**2
            + 3 * y4**2 / (y1 * y2)
            + y4**3 / y1**2
        )
        * y5
    )


def Y1b(y0, y1, y2, y3, y4, y5, c=None):
    return y0**2 / (y1 * y3) + y5 + y0 * (1 / y3 + y5 / y1 + y3 * y5 / y4**3)


def Yempty(y0, y1, y2, y3, y4, y5, c=None):
    return y0


# the birational map and its inverse


def M(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x3 * x4**2 / (x0 * x2)
        + 3 * x4**3 / x0
        + x3 * x5 / (x2 * x4)
        + x2 * (3 * x4**4 / (x0 * x3) + 3 * x4 * x5 / x0)
        + x2**2
        * (
            x4**2 / (x0 * x1)
            + x4**2 / (x1 * x3)
            + x4**5 / (x0 * x3**2)
            + x5 / (x1 * x4)
            + 2 * x4**2 * x5 / (x0 * x3)
            + x5**2 / (x0 * x4)
        )
    )


def N(x0, x1, x2, x3, x4, x5, c=None):
    return (
        3 * x1 * x3 / x2**3
        + x2 * x3 / (x1 * x4**2)
        + 2 * x3**2 / (x2**2 * x4**2)
        + x1 * x3**3 / (x2**5 * x4**2)
        + 3 * x3 / (x2 * x4)
        + 3 * x1 * x3**2 / (x2**4 * x4)
        + x1 * x4 / x2**2
        + x2 * x4 / x0
        + x1 * x3 * x5 / (x2**2 * x4**2)
        + x2 * x3 * x5 / (x0 * x4**2)
        + x1 * x3**2 * x5 / (x0 * x2**2 * x4**2)
    )


def a(x0, x1, x2, x3, x4, x5, c=None):
    return M(x0, x1, x2, x3, x4, x5) / (x2 * x4) ** 2


def y2_of(x0, x1, x2, x3, x4, x5, c=None):
    return x2 / x1 + x3 / x2**2 + 2 * x4 / x2 + x4**2 / x3 + x5 / x4


def y4_of(x0, x1, x2, x3, x4, x5, c=None):
    return M(x0, x1, x2, x3, x4, x5) / (y2_of(x0, x1, x2, x3, x4, x5) * x2 * x4)


def P(y0, y1, y2, y3, y4, y5, c=None):
    return (
        y0
        + y1
        + y0 * y1 * y5 / y2**3
        + 2 * y3 * y5
        + 2 * y0 * y3 * y5 / y1
        + y0 * y3**2 * y5 / y4**3
        + 2 * y1 * y3**2 * y5 / y4**3
        + 3 * y0 * y3 * y5 / (y2 * y4)
        + 3 * y1 * y3 * y5 / (y2 * y4)
        + 3 * y0 * y4 * y5 / y2**2
        + 3 * y0 * y4**2 * y5 / (y1 * y2)
        + y0 * y4**3 * y5 / y1**2
        + y1 * y3 * y5**2 / y2**3
        + 3 * y3**2 * y5**2 / y1
        + y1 * y3**4 * y5**2 / y4**6
        + 3 * y1 * y3**3 * y5**2 / (y2 * y4**4)
        + 3 * y3**3 * y5**2 / y4**3
        + 3 * y1 * y3**2 * y5**2 / (y2**2 * y4**2)
        + 6 * y3**2 * y5**2 / (y2 * y4)
        + 3 * y3 * y4 * y5**2 / y2**2
        + 3 * y3 * y4**2 * y5**2 / (y1 * y2)
        + y3 * y4**3 * y5**2 / y1**2
    )


# structure functions on the w1 chart


def _eps1_terms(x0, x1, x2, x3, x4, x5):
    return (
        x0 / x1,
        x0 * x2**3 / (x1**2 * x3),
        x0 * x2**3 * x4**3 / (x1**2 * x3**2 * x5),
    )


def _eps2_terms(x0, x1, x2, x3, x4, x5):
    return (x1 / x2, x1 * x3 / (x2**2 * x4))


def C1(x0, x1, x2, x3, x4, x5, c):
    t2, t4, t6 = _eps1_terms(x0, x1, x2, x3, x4, x5)
    return (c * t2 + t4 + t6) / (t2 + t4 + t6)


def C3(x0, x1, x2, x3, x4, x5, c):
    t2, t4, t6 = _eps1_terms(x0, x1, x2, x3, x4, x5)
    return (c * t2 + c * t4 + t6) / (c * t2 + t4 + t6)


def C5(x0, x1, x2, x3, x4, x5, c):
    t2, t4, t6 = _eps1_terms(x0, x1, x2, x3, x4, x5)
    return c * (t2 + t4 + t6) / (c * t2 + c * t4 + t6)


def C2(x0, x1, x2, x3, x4, x5, c):
    s3, s5 = _eps2_terms(x0, x1, x2, x3, x4, x5)
    return (c * s3 + s5) / (s3 + s5)


def C4(x0, x1, x2, x3, x4, x5, c):
    s3, s5 = _eps2_terms(x0, x1, x2, x3, x4, x5)
    return c * (s3 + s5) / (c * s3 + s5)


def _tail(x0, x1, x2, x3, x4, x5):
    return x1 * x2**3 * x3**2 * x5


def D(x0, x1, x2, x3, x4, x5, c):
    return (
        c**2 * x0**2 * x2**3 * x3
        + _tail(x0, x1, x2, x3, x4, x5)
        + c
        * x0
        * (
            x1 * x3**3
            + 3 * x1 * x2 * x3**2 * x4
            + 3 * x1 * x2**2 * x3 * x4**2
            + x2**3 * (x3**2 + x1 * x4**3 + x1 * x3 * x5)
        )
    )


def E(x0, x1, x2, x3, x4, x5, c=None):
    return (
        x0**2 * x2**3 * x3
        + _tail(x0, x1, x2, x3, x4, x5)
        + x0
        * (
            x1 * x3**3
            + 3 * x1 * x2 * x3**2 * x4
            + 3 * x1 * x2**2 * x3 * x4**2
            + x2**3 * (x3**2 + x1 * x4**3 + x1 * x3 * x5)
        )
    )


def F(x0, x1, x2, x3, x4, x5, c):
    return (
        c * x0**2 * x2**3 * x3
        + _tail(x0, x1, x2, x3, x4, x5)
        + x0
        * (
            c * x1 * x3**3
            + 3 * c * x1 * x2 * x3**2 * x4
            + 3 * c * x1 * x2**2 * x3 * x4**2
            + x2**3 * (x3**2 + c * x1 * x4**3 + c * x1 * x3 * x5)
        )
    )


def G(x0, x1, x2, x3, x4, x5, c):
    return (
        c * x0**2 * x2**3 * x3
        + _tail(x0, x1, x2, x3, x4, x5)
        + x0
        * (
            x1 * x3**3
            + (2 + c) * x1 * x2 * x3**2 * x4
            + (1 + 2 * c) * x1 * x2**2 * x3 * x4**2
            + x2**3 * (x3**2 + c * x1 * x4**3 + c * x1 * x3 * x5)
        )
    )


def H(x0, x1, x2, x3, x4, x5, c):
    return (
        c * x0**2 * x2**3 * x3
        + _tail(x0, x1, x2, x3, x4, x5)
        + x0
        * (
            x1 * x3**3
            + 3 * x1 * x2 * x3**2 * x4
            + 3 * x1 * x2**2 * x3 * x4**2
            + x2**3 * (x3**2 + x1 * x4**3 + c * x1 * x3 * x5)
        )
    )


def eps0(x0, x1, x2, x3, x4, x5, c=None):
    return E(x0, x1, x2, x3, x4, x5) / (x0**3 * x2**3 * x3)


def eps1(x0, x1, x2, x3, x4, x5, c=None):
    t2, t4, t6 = _eps1_terms(x0, x1, x2, x3, x4, x5)
    return t2 + t4 + t6


def eps2(x0, x1, x2, x3, x4, x5, c=None):
    s3, s5 = _eps2_terms(x0, x1, x2, x3, x4, x5)
    return s3 + s5


def gamma0(x0, x1, x2, x3, x4, x5, c=None):
    return x0**2 / (x1 * x3 * x5)


def gamma1(x0, x1, x2, x3, x4, x5, c=None):
    return x1**2 * x3**2 * x5**2 / (x0 * x2**3 * x4**3)


def gamma2(x0, x1, x2, x3, x4, x5, c=None):
    return x2**2 * x4**2 / (x1 * x3 * x5)


# coordinate updates of the explicit operators; index k is the chart position


def e0_coords(x0, x1, x2, x3, x4, x5, c):
    d = D(x0, x1, x2, x3, x4, x5, c)
    e = E(x0, x1, x2, x3, x4, x5)
    f = F(x0, x1, x2, x3, x4, x5, c)
    g = G(x0, x1, x2, x3, x4, x5, c)
    h = H(x0, x1, x2, x3, x4, x5, c)
    return (
        d / (c * e) * x0,
        f / (c * e) * x1,
        g / (c * e) * x2,
        d * h / (c**2 * e * f) * x3,
        d / (c * g) * x4,
        d / (c * h) * x5,
    )


def e1_coords(x0, x1, x2, x3, x4, x5, c):
    t2, t4, t6 = _eps1_terms(x0, x1, x2, x3, x4, x5)
    return (
        x0,
        (c * t2 + t4 + t6) / (t2 + t4 + t6) * x1,
        x2,
        (c * t2 + c * t4 + t6) / (c * t2 + t4 + t6) * x3,
        x4,
        c * (t2 + t4 + t6) / (c * t2 + c * t4 + t6) * x5,
    )


def e2_coords(x0, x1, x2, x3, x4, x5, c):
    s3, s5 = _eps2_terms(x0, x1, x2, x3, x4, x5)
    return (
        x0,
        x1,
        (c * s3 + s5) / (s3 + s5) * x2,
        x3,
        c * (s3 + s5) / (c * s3 + s5) * x4,
        x5,
    )


E_COORDS = {0: e0_coords, 1: e1_coords, 2: e2_coords}
EPS = {0: eps0, 1: eps1, 2: eps2}
GAMMA = {0: gamma0, 1: gamma1, 2: gamma2}

X_COEFFICIENTS: dict[BasisVector, Callable[..., Any]] = {
    b: globals()["X" + b.value] for b in BASIS
}
Y_COEFFICIENTS: dict[BasisVector, Callable[..., Any]] = {
    b: globals()["Y" + b.value] for b in BASIS
}


@dataclass(frozen=True)
class NamedFormula:
    name: str
    table: VarTable
    builder: Callable[..., Any] = field(repr=False, compare=False)
    group: str = ""
    description: str = ""

    def build(self, values: Mapping[str, Any]) -> Any:
        """Apply the builder to values keyed by variable name."""
        return self.builder(*(values.get(n) for n in self.table.names))

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        return self.build(point)

    @cached_property
    def body(self) -> RationalFunction:
        result = self.builder(*RationalFunction.variables(self.table))
        return RationalFunction.from_value(self.table, result)

    def is_positive(self) -> Positivity:
        return rf_is_positive(self.body)


def _coordinate(i: int, k: int) -> Callable[..., Any]:
    def build(x0, x1, x2, x3, x4, x5, c):
        return E_COORDS[i](x0, x1, x2, x3, x4, x5, c)[k]

    build.__name__ = f"e{i}_x{k}"
    return build


def _registry() -> dict[str, NamedFormula]:
    entries: list[NamedFormula] = []
    for b, fn in X_COEFFICIENTS.items():
        entries.append(NamedFormula(f"X{b.value}", X_TABLE, fn, "lemma_x", f"coefficient of [{b.label}] in v1"))
    for b, fn in Y_COEFFICIENTS.items():
        entries.append(NamedFormula(f"Y{b.value}", Y_TABLE, fn, "lemma_y", f"coefficient of [{b.label}] in v2"))
    entries += [
        NamedFormula("M", X_TABLE, M, "sigma"),
        NamedFormula("N", X_TABLE, N, "sigma"),
        NamedFormula("a", X_TABLE, a, "sigma", "scalar with v2(y) = a v1(x)"),
        NamedFormula("y2", X_TABLE, y2_of, "sigma"),
        NamedFormula("y4", X_TABLE, y4_of, "sigma"),
        NamedFormula("P", Y_TABLE, P, "inverse"),
    ]
    for name, fn in (("C1", C1), ("C2", C2), ("C3", C3), ("C4", C4), ("C5", C5)):
        entries.append(NamedFormula(name, X_TABLE, fn, "theorem", "multiplier of an e1/e2 coordinate"))
    for name, fn in (("D", D), ("E", E), ("F", F), ("G", G), ("H", H)):
        entries.append(NamedFormula(name, X_TABLE, fn, "theorem", "polynomial of the e0 action"))
    for i in EPS:
        entries.append(NamedFormula(f"eps{i}", X_TABLE, EPS[i], "structure"))
        entries.append(NamedFormula(f"gamma{i}", X_TABLE, GAMMA[i], "structure"))
    for i in E_COORDS:
        for k in range(6):
            entries.append(
                NamedFormula(f"e{i}_x{k}", X_TABLE, _coordinate(i, k), "operator", f"x{k} after e{i}^c")
            )
    return {f.name: f for f in entries}


FORMULAS: dict[str, NamedFormula] = _registry()


def get_formula(name: str) -> NamedFormula:
    try:
        return FORMULAS[name]
    except KeyError:
        raise UnknownFormulaError(name, known=sorted(FORMULAS)) from None


def formulas_in(group: str) -> list[NamedFormula]:
    return [f for f in FORMULAS.values() if f.group == group]


def tropical_targets() -> list[NamedFormula]:
    """The six structure functions and the eighteen operator coordinates."""
    return formulas_in("structure") + formulas_in("operator")

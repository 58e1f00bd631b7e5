"""Wall-crossing numbers of families in the critical case.

Signs follow one global orientation: ``y_1..y_{b1}`` in order orients the
torus, ``[M]`` sends the declared volume monomial to +1, and the four-torus
comes out with the positive value ``c_1(L)^2/8 + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Tuple

from .errors import CrossCheckError, ValidationError
from .exterior import ExtElem, top_coefficient
from .index import index_character, torus_generators
from .manifold import ManifoldModel, OneCycle, SpincClass
from .multiseries import MultiSeries
from .presets import preset

__all__ = [
    "SIGN_CONVENTION",
    "WcnValue",
    "mu_class",
    "wcn_pure",
    "wcn_mixed",
    "sw_from_winding",
    "kodaira_class",
    "kodaira_series_q1",
    "kodaira_series_q1_closed_form",
    "kodaira_series_q3",
    "kodaira_series_q3_closed_form",
    "SERIES_VARS",
]

SIGN_CONVENTION = "cor-4.12-positive"
SERIES_VARS = ("t1", "t2", "t3", "t4")


@dataclass(frozen=True)
class WcnValue:
    value: Fraction
    convention: str = SIGN_CONVENTION

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __str__(self) -> str:
        return str(self.value)


def mu_class(m: ManifoldModel, zeta: OneCycle) -> ExtElem:
    """The degree-one torus class ``sum_k n_k y_k``."""
    m.check_cycle(zeta)
    gens = torus_generators(m.b1)
    return ExtElem(gens, {1 << k: n for k, n in enumerate(zeta.components)})


def wcn_mixed(m: ManifoldModel, L: SpincClass, zetas: Sequence[OneCycle] = ()) -> WcnValue:
    """Sum over ``i + 2j = (b1 - q)/2`` of
    ``(-1)^i C(i+j, i) ch_1^i ch_2^j / (i+j)! * mu(zeta_1)...mu(zeta_q)``
    evaluated on the torus."""
    q = len(zetas)
    rest = m.b1 - q
    if rest < 0 or rest % 2:
        m.check_spinc(L)
        return WcnValue(0)
    half = rest // 2
    ic = index_character(m, L)
    mu = ExtElem.one(torus_generators(m.b1))
    for z in zetas:
        mu = mu * mu_class(m, z)
    total = Fraction(0)
    for j in range(half // 2 + 1):
        i = half - 2 * j
        weight = Fraction((-1) ** i * comb(i + j, i), factorial(i + j))
        total += weight * top_coefficient(ic.ch1 ** i * ic.ch2 ** j * mu)
    return WcnValue(total)


def wcn_pure(m: ManifoldModel, L: SpincClass) -> WcnValue:
    """``sum_{i + 2j = b1/2} (-1)^i ch_1^i ch_2^j / (i! j!)`` on the torus."""
    m.check_spinc(L)
    if m.b1 % 2:
        return WcnValue(0)
    ic = index_character(m, L)
    total = Fraction(0)
    half = m.b1 // 2
    for j in range(half // 2 + 1):
        i = half - 2 * j
        total += Fraction((-1) ** i, factorial(i) * factorial(j)) * top_coefficient(ic.ch1 ** i * ic.ch2 ** j)
    return WcnValue(total)


def sw_from_winding(wcn_consecutive: WcnValue, chamber: int) -> WcnValue:
    """Invariant in winding chamber ``chamber``: zero in chamber 0 and one
    equal jump per crossing."""
    return WcnValue(chamber * wcn_consecutive.value, wcn_consecutive.convention)


# -- primary Kodaira surface ----------------------------------------------

def kodaira_class(k: Sequence[int]) -> SpincClass:
    """``L(k) = 2 (k1 e1 + k2 e2 + k3 e3 + k4 e4)``."""
    return SpincClass(tuple(2 * v for v in k))


def _check_orders(orders: Sequence[int]) -> Tuple[int, ...]:
    orders = tuple(int(o) for o in orders)
    if len(orders) != 4 or min(orders) < 0:
        raise ValidationError("series orders are four non-negative integers")
    return orders


def _termwise(zetas: Sequence[OneCycle], orders: Tuple[int, ...]) -> MultiSeries:
    m = preset("kodaira")
    box = MultiSeries(SERIES_VARS, orders)
    return MultiSeries(SERIES_VARS, orders, {
        k: wcn_mixed(m, kodaira_class(k), zetas).value for k in box.exponents()
    })


def _poly(orders, terms) -> MultiSeries:
    return MultiSeries(SERIES_VARS, orders, terms)


def _geometric_denominator(orders, powers: Sequence[int]) -> MultiSeries:
    """``prod_i (1 - t_i)^{powers[i]}`` as a polynomial."""
    out = MultiSeries.one(SERIES_VARS, orders)
    for i, p in enumerate(powers):
        e = [0, 0, 0, 0]
        e[i] = 1
        factor = _poly(orders, {(0, 0, 0, 0): 1, tuple(e): -1})
        for _ in range(p):
            out = out * factor
    return out


def kodaira_series_q1_closed_form(zeta: OneCycle, orders: Sequence[int] = (5, 5, 5, 5)) -> MultiSeries:
    """Expansion of ``-(n2 t3 + n3 t4 - (n2 + n3) t3 t4) /
    ((1-t1)(1-t2)(1-t3)^2(1-t4)^2)``, with ``zeta = n3 dx + n2 dy + n1 dt``."""
    orders = _check_orders(orders)
    n3, n2, _n1 = zeta.components
    numerator = _poly(orders, {(0, 0, 1, 0): -n2, (0, 0, 0, 1): -n3, (0, 0, 1, 1): n2 + n3})
    return numerator * _geometric_denominator(orders, (1, 1, 2, 2)).inverse()


def kodaira_series_q1(zeta: OneCycle, orders: Sequence[int] = (5, 5, 5, 5)) -> MultiSeries:
    """Generating series of the one-insertion wall-crossing numbers over
    ``L(k)``, computed term by term and checked against the closed form."""
    orders = _check_orders(orders)
    preset("kodaira").check_cycle(zeta)
    series = _termwise([zeta], orders)
    closed = kodaira_series_q1_closed_form(zeta, orders)
    if series != closed:
        bad = next(k for k in series.exponents() if series[k] != closed[k])
        raise CrossCheckError(
            f"Kodaira q=1 series mismatch at t^{bad}: term-by-term {series[bad]}, closed form {closed[bad]}")
    return series


def _phi(z1: OneCycle, z2: OneCycle, z3: OneCycle) -> Fraction:
    """``phi(z1 ^ z2 ^ z3)`` with ``phi(dx ^ dy ^ dt) = 1``: a 3x3 determinant."""
    (a, b, c), (d, e, f), (g, h, i) = z1.components, z2.components, z3.components
    return Fraction(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))


def kodaira_series_q3_closed_form(z1: OneCycle, z2: OneCycle, z3: OneCycle,
                                  orders: Sequence[int] = (5, 5, 5, 5)) -> MultiSeries:
    orders = _check_orders(orders)
    return _geometric_denominator(orders, (1, 1, 1, 1)).inverse() * _phi(z1, z2, z3)


def kodaira_series_q3(z1: OneCycle, z2: OneCycle, z3: OneCycle,
                      orders: Sequence[int] = (5, 5, 5, 5)) -> MultiSeries:
    orders = _check_orders(orders)
    m = preset("kodaira")
    for z in (z1, z2, z3):
        m.check_cycle(z)
    series = _termwise([z1, z2, z3], orders)
    closed = kodaira_series_q3_closed_form(z1, z2, z3, orders)
    if series != closed:
        bad = next(k for k in series.exponents() if series[k] != closed[k])
        raise CrossCheckError(
            f"Kodaira q=3 series mismatch at t^{bad}: term-by-term {series[bad]}, closed form {closed[bad]}")
    return series

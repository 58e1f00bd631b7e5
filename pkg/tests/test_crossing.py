import random
from fractions import Fraction
from itertools import product

import pytest

from wallcross.crossing import (
    SIGN_CONVENTION, WcnValue, kodaira_class, kodaira_series_q1, kodaira_series_q1_closed_form,
    kodaira_series_q3, sw_from_winding, wcn_mixed, wcn_pure,
)
from wallcross.errors import ValidationError
from wallcross.manifold import ManifoldModel, OneCycle, SpincClass
from wallcross.multiseries import MultiSeries
from wallcross.presets import preset

DX, DY, DT = OneCycle((1, 0, 0)), OneCycle((0, 1, 0)), OneCycle((0, 0, 1))


def test_b1_zero_is_one():
    assert wcn_pure(preset("k3"), SpincClass((0,) * 22)).value == 1


def test_t4_square_eight():
    w = wcn_pure(preset("t4"), SpincClass((1, 0, 0, 0, 0, 4)))
    assert w.value == 2
    assert w.convention == SIGN_CONVENTION


def test_kodaira_pure_vanishes():
    rng = random.Random(1)
    for _ in range(10):
        L = SpincClass([rng.randint(-4, 4) for _ in range(4)])
        assert wcn_pure(preset("kodaira"), L).value == 0


def test_kodaira_q1_example():
    w = wcn_mixed(preset("kodaira"), SpincClass((0, 0, 2, 4)), [DY])
    assert w.value == -1


def test_kodaira_q1_ignores_m1_m2_n1():
    m = preset("kodaira")
    for m1, m2, n1 in product((-2, 0, 4), (-2, 0, 2), (-1, 0, 3)):
        got = wcn_mixed(m, SpincClass((m1, m2, 2, -2)), [OneCycle((1, 2, n1))]).value
        assert got == Fraction(-(2 * 2 + -2 * 1), 2)


def test_kodaira_q3_is_determinant():
    m = preset("kodaira")
    L = SpincClass((2, 0, -4, 6))
    assert wcn_mixed(m, L, [DX, DY, DT]).value == 1
    assert wcn_mixed(m, L, [DY, DX, DT]).value == -1
    assert wcn_mixed(m, L, [DX, DX, DT]).value == 0


def test_even_insertions_vanish_on_kodaira():
    m = preset("kodaira")
    assert wcn_mixed(m, SpincClass((0, 0, 2, 2)), [DX, DY]).value == 0


def test_too_many_insertions():
    m = preset("kodaira")
    assert wcn_mixed(m, SpincClass((0, 0, 2, 2)), [DX, DY, DT, DX, DY]).value == 0


def test_mixed_with_no_insertions_equals_pure():
    rng = random.Random(4)
    for name in ("t4", "k3", "kodaira"):
        m = preset(name)
        for _ in range(5):
            L = SpincClass([rng.randint(-4, 4) for _ in range(m.h2_rank)])
            assert wcn_mixed(m, L, []) == wcn_pure(m, L)


def test_t4_two_insertions_alternating():
    m = preset("t4")
    rng = random.Random(8)
    for _ in range(10):
        L = SpincClass([rng.randint(-3, 3) for _ in range(6)])
        z1 = OneCycle([rng.randint(-2, 2) for _ in range(4)])
        z2 = OneCycle([rng.randint(-2, 2) for _ in range(4)])
        assert wcn_mixed(m, L, [z1, z2]).value == -wcn_mixed(m, L, [z2, z1]).value
        assert wcn_mixed(m, L, [z1, z1]).value == 0
        assert wcn_mixed(m, L, [z1]).value == 0


def test_t4_grid_matches_corollary():
    m = preset("t4")
    for L in product((-1, 0, 2), repeat=6):
        L = SpincClass(L)
        assert wcn_pure(m, L).value == Fraction(m.square(L), 8) + 1


def test_winding_chambers():
    w = WcnValue(Fraction(7, 2))
    assert sw_from_winding(w, 0).value == 0
    assert sw_from_winding(w, 1) == w
    assert sw_from_winding(w, -1).value == Fraction(-7, 2)
    for a, b in product(range(-3, 4), repeat=2):
        assert sw_from_winding(w, a + b).value == sw_from_winding(w, a).value + sw_from_winding(w, b).value


def test_b1_six_model():
    # T^6-like cup data: x1..x6 with eps nonzero on (1234) only; sanity of parity and degree
    m = ManifoldModel("t", b1=6, bplus=1, euler=-8, signature=0, h2_rank=2,
                      intersection=((0, 1), (1, 0)), triple={(0, 1, 0): 1, (2, 3, 1): 1},
                      quadruple={(0, 1, 2, 3): 1})
    # b1/2 = 3: terms ch1^3 and ch1 ch2; ch1 lives on y1y2, y3y4 only so the top y1..y6 vanishes
    assert wcn_pure(m, SpincClass((2, 2))).value == 0
    assert wcn_mixed(m, SpincClass((2, 2)), [OneCycle((0, 0, 0, 0, 1, 0))]).value == 0


# -- generating series ----------------------------------------------------

def test_series_zero_when_n2_n3_vanish():
    s = kodaira_series_q1(OneCycle((0, 0, 5)), (3, 3, 3, 3))
    assert s.is_zero()


def test_series_t3_coefficient():
    s = kodaira_series_q1(DY, (2, 2, 2, 2))
    assert s[(0, 0, 1, 0)] == -1


def test_series_against_direct_formula():
    zeta = OneCycle((3, -2, 1))  # n3 = 3, n2 = -2
    s = kodaira_series_q1(zeta, (2, 2, 3, 3))
    for k in s.exponents():
        assert s[k] == -(k[2] * -2 + k[3] * 3)


def test_closed_form_small_order_by_hand():
    # numerator -(t3 + t4 - 2 t3 t4) for n2 = n3 = 1, truncated at order 1
    s = kodaira_series_q1_closed_form(OneCycle((1, 1, 0)), (1, 1, 1, 1))
    assert s[(0, 0, 1, 0)] == -1
    assert s[(0, 0, 1, 1)] == -2
    assert s[(1, 0, 0, 1)] == -1
    assert s[(0, 0, 0, 0)] == 0


def test_series_q3_unit():
    s = kodaira_series_q3(DX, DY, DT, (2, 2, 2, 2))
    assert all(s[k] == 1 for k in s.exponents())


def test_series_q3_dependent_is_zero():
    s = kodaira_series_q3(DX, OneCycle((2, 0, 0)), DT, (2, 2, 2, 2))
    assert s.is_zero()


def test_series_q3_scaled():
    s = kodaira_series_q3(OneCycle((2, 0, 0)), DY, DT, (2, 2, 2, 2))
    assert all(s[k] == 2 for k in s.exponents())


def test_series_bad_orders():
    with pytest.raises(ValidationError):
        kodaira_series_q1(DY, (1, 1, 1))


def test_kodaira_class():
    assert kodaira_class((1, 0, -2, 3)).components == (2, 0, -4, 6)


def test_multiseries_inverse_and_csv():
    vs = ("t1", "t2", "t3", "t4")
    denom = MultiSeries(vs, (2, 2, 2, 2), {(0, 0, 0, 0): 1, (1, 0, 0, 0): -1})
    inv = denom.inverse()
    assert all(inv[(k, 0, 0, 0)] == 1 for k in range(3))
    assert (denom * inv) == MultiSeries.one(vs, (2, 2, 2, 2))
    csv = inv.to_csv().splitlines()
    assert csv[0] == "t1,t2,t3,t4,value"
    assert len(csv) == 1 + 3 ** 4
    assert csv[1] == "0,0,0,0,1"

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from wallcross.exterior import (
    ExtElem, GradedSeries, ext_mul, fibre_integrate, monomial_sign, series_exp,
    series_inverse, series_mul, top_coefficient,
)

Y2 = ("y1", "y2")
Y4 = ("y1", "y2", "y3", "y4")
Y6 = tuple(f"y{i}" for i in range(1, 7))


def g(gens, name):
    return ExtElem.gen(gens, name)


def test_odd_generators_anticommute():
    y1, y2 = g(Y2, "y1"), g(Y2, "y2")
    assert y1 * y2 == ExtElem(Y2, {0b11: 1})
    assert y2 * y1 == ExtElem(Y2, {0b11: -1})


def test_odd_square_vanishes():
    y1 = g(Y2, "y1")
    assert (y1 * y1).is_zero()


def test_omega_squared_sign():
    # (x1 y1)(x2 y2) = x1 y1 x2 y2 = -x1 x2 y1 y2: one swap of y1 past x2
    gens = ("x1", "x2", "y1", "y2")
    omega = g(gens, "x1") * g(gens, "y1") + g(gens, "x2") * g(gens, "y2")
    assert omega * omega == ExtElem(gens, {0b1111: -2})


def test_mismatched_generators_rejected():
    with pytest.raises(ValueError, match="generator sets differ"):
        ext_mul(g(Y2, "y1"), g(Y4, "y1"))


def test_monomial_sign_counts_inversions():
    assert monomial_sign(0b10, 0b01) == -1
    assert monomial_sign(0b01, 0b10) == 1
    assert monomial_sign(0b110, 0b001) == 1
    assert monomial_sign(0b11, 0b01) == 0


def test_zero_coefficients_not_stored():
    e = ExtElem(Y2, {0b01: 0, 0b10: Fraction(1, 2)})
    assert e.terms == {0b10: Fraction(1, 2)}


def test_rejects_monomial_outside_generators():
    with pytest.raises(ValueError):
        ExtElem(Y2, {0b100: 1})


def _ch1_6():
    return g(Y6, "y1") * g(Y6, "y2") + g(Y6, "y3") * g(Y6, "y4") + g(Y6, "y5") * g(Y6, "y6")


def test_series_mul_unit():
    one = GradedSeries.one(Y2, 3)
    assert series_mul(one, one) == one


def test_series_mul_hand_expansion():
    # (1 + a t)(1 - a t + a^2 t^2) = 1 + a^3 t^3; a^3 = 6 y1..y6 for three commuting blocks
    a = _ch1_6()
    one = ExtElem.one(Y6)
    left = GradedSeries(Y6, 3, [one, a])
    right = GradedSeries(Y6, 3, [one, -a, a * a])
    prod = series_mul(left, right)
    assert prod == GradedSeries(Y6, 3, [one, 0, 0, ExtElem(Y6, {0b111111: 6})])


def test_series_mul_truncates_to_smaller_order():
    a = GradedSeries(Y2, 4, [1, 1])
    b = GradedSeries(Y2, 2, [1, 1])
    assert series_mul(a, b).truncation_order == 2


def test_exp_zero():
    zero = GradedSeries(Y4, 4)
    assert series_exp(zero) == GradedSeries.one(Y4, 4)


def test_exp_nilpotent_stops():
    ch1 = g(Y4, "y1") * g(Y4, "y2") + g(Y4, "y3") * g(Y4, "y4")
    s = series_exp(GradedSeries(Y4, 4, [0, ch1]))
    assert s[1] == ch1
    assert s[2] == ch1 * ch1 / 2
    assert s[2] == ExtElem(Y4, {0b1111: 1})
    assert s[3].is_zero() and s[4].is_zero()


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(GradedSeries(Y2, 2, [1]))


def test_exp_two_term_coefficients():
    # coefficient of t^n in exp(-a t + b t^2) is sum_{i+2j=n} (-1)^i a^i b^j / (i! j!)
    a = _ch1_6()
    b = g(Y6, "y1") * g(Y6, "y2") * g(Y6, "y3") * g(Y6, "y4") * 3 + g(Y6, "y3") * g(Y6, "y4") * g(Y6, "y5") * g(Y6, "y6")
    s = series_exp(GradedSeries(Y6, 6, [0, -a, b]))
    for n in range(7):
        expected = ExtElem.zero(Y6)
        for j in range(n // 2 + 1):
            i = n - 2 * j
            expected = expected + (a ** i) * (b ** j) * Fraction((-1) ** i, factorial(i) * factorial(j))
        assert s[n] == expected


def test_inverse_unit():
    assert series_inverse(GradedSeries.one(Y2, 3)) == GradedSeries.one(Y2, 3)


def test_inverse_geometric():
    a = _ch1_6()
    inv = series_inverse(GradedSeries(Y6, 4, [1, a]))
    for k in range(5):
        assert inv[k] == (-a) ** k


def test_inverse_of_exponential():
    a = _ch1_6()
    b = g(Y6, "y1") * g(Y6, "y2") * g(Y6, "y5") * g(Y6, "y6")
    c = series_exp(GradedSeries(Y6, 6, [0, a, -b]))
    s = series_exp(GradedSeries(Y6, 6, [0, -a, b]))
    assert series_inverse(c) == s


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        series_inverse(GradedSeries(Y2, 2, [2]))


def test_top_coefficient():
    y = [g(Y4, n) for n in Y4]
    assert top_coefficient(y[0] * y[1] * y[2] * y[3]) == 1
    assert top_coefficient(y[1] * y[0] * y[2] * y[3]) == -1
    assert top_coefficient(y[0] * y[1] + 5) == 0
    assert top_coefficient(ExtElem.one(())) == 1


XY = ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")


def test_fibre_integrate_top_form():
    xs = XY[:4]
    e = ExtElem.monomial(XY, xs)
    assert fibre_integrate(e, xs) == ExtElem.one(XY[4:])


def test_fibre_integrate_no_fibre_form():
    assert fibre_integrate(ExtElem.monomial(XY, ["y1", "y2"]), XY[:4]).is_zero()


def test_fibre_integrate_omega_fourth():
    # Omega^4/4! = prod_i x_i y_i = + x1x2x3x4 y1y2y3y4 (3+2+1 swaps)
    omega = sum((ExtElem.monomial(XY, [f"x{i}", f"y{i}"]) for i in range(1, 5)), ExtElem.zero(XY))
    out = fibre_integrate(omega ** 4 / 24, XY[:4])
    assert out == ExtElem.monomial(XY[4:], XY[4:])


def test_fibre_integrate_sign_of_interleaved_word():
    gens = ("y1", "x1", "y2")
    # y1 x1 y2 = - x1 y1 y2
    e = ExtElem(gens, {0b111: 1})
    assert fibre_integrate(e, ["x1"]) == ExtElem(("y1", "y2"), {0b11: -1})


def test_fibre_integrate_listed_order_matters():
    gens = ("x1", "x2", "y1")
    e = ExtElem(gens, {0b011: 1})
    assert fibre_integrate(e, ["x1", "x2"]) == ExtElem.one(("y1",))
    assert fibre_integrate(e, ["x2", "x1"]) == -ExtElem.one(("y1",))


def test_fibre_integrate_rejects_unknown_generator():
    with pytest.raises(ValueError):
        fibre_integrate(ExtElem.one(Y2), ["x1"])


# -- properties -----------------------------------------------------------

GENS = tuple(f"y{i}" for i in range(1, 6))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def elements(draw, degree=None):
    masks = [m for m in range(1 << len(GENS)) if degree is None or m.bit_count() == degree]
    chosen = draw(st.lists(st.sampled_from(masks), max_size=6, unique=True))
    return ExtElem(GENS, {m: draw(coeffs) for m in chosen})


@st.composite
def homogeneous(draw):
    d = draw(st.integers(0, len(GENS)))
    return draw(elements(d)), d


@given(homogeneous(), homogeneous())
def test_graded_commutativity(a, b):
    (x, dx), (y, dy) = a, b
    assert x * y == (y * x) * (-1) ** (dx * dy)


@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(), elements(), elements())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(elements(), elements())
def test_nilpotency_bound(a, b):
    for d in range(len(GENS) + 1):
        for e in range(len(GENS) + 1):
            if d + e > len(GENS):
                assert (a.part(d) * b.part(e)).is_zero()


@st.composite
def even_series(draw, order=4):
    coeffs_ = [ExtElem.zero(GENS)]
    for _ in range(order):
        coeffs_.append(draw(elements(2)) + draw(elements(4)))
    return GradedSeries(GENS, order, coeffs_)


@settings(max_examples=40)
@given(even_series())
def test_series_inverse_property(a):
    unit = GradedSeries.one(GENS, a.truncation_order) + a
    assert series_mul(unit, series_inverse(unit)) == GradedSeries.one(GENS, a.truncation_order)


@settings(max_examples=40)
@given(even_series())
def test_exp_of_negative_is_inverse(a):
    assert series_mul(series_exp(a), series_exp(-a)) == GradedSeries.one(GENS, a.truncation_order)


@settings(max_examples=40)
@given(even_series(), even_series(), even_series())
def test_series_associativity(a, b, c):
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


@settings(max_examples=30)
@given(even_series())
def test_exp_denominators_divide_factorials(a):
    # with integer-coefficient input, every denominator of exp divides n!^2 at order n
    a = GradedSeries(GENS, a.truncation_order, [
        ExtElem(GENS, {m: Fraction(c.numerator) for m, c in e.terms.items()}) for e in a.coefficients
    ])
    s = series_exp(a)
    n = a.truncation_order
    for e in s.coefficients:
        for c in e.terms.values():
            assert (factorial(n) ** 2) % c.denominator == 0

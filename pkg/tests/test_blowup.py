from fractions import Fraction
from itertools import combinations
from math import prod

import pytest

from wallcross.blowup import (
    FMSpec, Geometry, T4_GEOMETRY, Twist, fm_bundle_chern, fm_expected_dimension,
    fm_normalize, fm_summands, fm_t4_nodal, fm_wcn_n1, fm_wcn_n1_mixed,
)
from wallcross.charclass import TWISTED_VARS, TWISTED_WEIGHTS
from wallcross.crossing import WcnValue
from wallcross.errors import ValidationError
from wallcross.manifold import SpincClass, expected_dimension
from wallcross.polynomial import Poly
from wallcross.presets import preset

ONE = WcnValue(1)
BASIS = [Geometry(C0_sq=1), Geometry(C0_K=1), Geometry(c1_sq=1), Geometry(c2=1)]


def coefficients(m):
    return [fm_wcn_n1(FMSpec((m,), g), ONE).value for g in BASIS]


def root_oracle_c2(m):
    """e_2 of the Chern roots {a t1 + b t2 + c0 : a + b = j < m}, reduced by
    hand: with l_k the t-parts, e_2 = (S^2 - p_2)/2 where
    S = r c0 + sum l, p_2 = sum l^2 + 2 c0 sum l + r c0^2."""
    # represent polynomials in (t1, t2) via dicts; only sums needed
    ls = [(a, j - a) for j in range(m) for a in range(j + 1)]
    r = len(ls)
    sum_l = (sum(a for a, _ in ls), sum(b for _, b in ls))  # symmetric: equal parts
    assert sum_l[0] == sum_l[1]
    s1 = sum_l[0]  # sum l = s1 * c1M
    # sum l^2 = A (t1^2 + t2^2) + B t1 t2 = A c1M^2 + (B - 2A) c2M
    A = sum(a * a for a, _ in ls)
    B = sum(2 * a * b for a, b in ls)
    # S^2 = r^2 c0^2 + 2 r s1 c0 c1M + s1^2 c1M^2
    c0c0 = Fraction(r * r - r, 2)
    c0c1 = Fraction(2 * r * s1 - 2 * s1, 2)
    c1c1 = Fraction(s1 * s1 - A, 2)
    c2 = Fraction(-(B - 2 * A), 2)
    return [c0c0, c0c1, c1c1, c2]


def test_m2_polynomial():
    assert coefficients(2) == [3, 2, 0, 1]


def test_m1_vanishes():
    assert coefficients(1) == [0, 0, 0, 0]


def test_m3_by_roots():
    assert coefficients(3) == [15, 20, 5, 5]


@pytest.mark.parametrize("m", range(1, 6))
def test_whitney_vs_root_oracle(m):
    assert coefficients(m) == root_oracle_c2(m)


@pytest.mark.parametrize("m", range(0, 6))
def test_z2_symmetry(m):
    g = Geometry(4, -7, 9, 2)
    d = WcnValue(Fraction(5, 3))
    assert fm_wcn_n1(FMSpec((m,), g), d) == fm_wcn_n1(FMSpec((-m - 1,), g), d)


def test_linear_in_delta0():
    spec = FMSpec((3,), Geometry(2, 1, 0, 5))
    base = fm_wcn_n1(spec, ONE).value
    for d in (Fraction(-2), Fraction(7, 4), Fraction(0)):
        assert fm_wcn_n1(spec, WcnValue(d)).value == base * d


def test_summands_m2():
    s = fm_summands(FMSpec((2,)))
    assert [(x.point_index, x.sym_power, x.rank) for x in s] == [(1, 0, 1), (1, 1, 2)]
    assert sum(x.rank for x in s) == 3
    assert all(str(x.twist) == "C0" for x in s)


def test_summands_empty():
    assert fm_summands(FMSpec((0,))) == []


def test_summands_two_points():
    s = fm_summands(FMSpec((2, 1)))
    assert [(x.point_index, x.sym_power) for x in s] == [(1, 0), (1, 1), (2, 0)]
    assert s[2].twist == Twist((-2,))
    assert str(s[2].twist) == "C0 - 2E1"
    assert sum(x.rank for x in s) == 4


@pytest.mark.parametrize("ms", [(1,), (3, 2), (0, 4, 1), (2, 2, 2)])
def test_summand_total_rank(ms):
    assert sum(x.rank for x in fm_summands(FMSpec(ms))) == sum(m * (m + 1) // 2 for m in ms)


def test_summands_need_normalisation():
    with pytest.raises(ValidationError):
        fm_summands(FMSpec((-3,)))


def test_normalize():
    assert fm_normalize(FMSpec((-3,))).multiplicities == (2,)
    assert fm_normalize(FMSpec((0,))).multiplicities == (0,)
    spec = FMSpec((-1, 4, -6))
    assert fm_normalize(spec).multiplicities == (0, 4, 5)
    assert fm_normalize(fm_normalize(spec)) == fm_normalize(spec)


def test_eta_insertions():
    spec = FMSpec((2,), Geometry(3, 1, 0, 2))
    d = WcnValue(5)
    assert fm_wcn_n1_mixed(spec, d, 4).value == 5
    assert fm_wcn_n1_mixed(spec, d, 0) == fm_wcn_n1(spec, d)
    a, b = 2, -7
    assert fm_wcn_n1_mixed(spec, d, 2, (a, b)).value == 5 * (3 * a + b)


def test_eta_bad_degree():
    with pytest.raises(ValidationError):
        fm_wcn_n1_mixed(FMSpec((2,)), ONE, 3)
    with pytest.raises(ValidationError):
        fm_wcn_n1_mixed(FMSpec((2,)), ONE, 2)


def test_bundle_chern_c1_m2():
    c1 = fm_bundle_chern(FMSpec((2,))).weighted_part(TWISTED_WEIGHTS, 1)
    assert c1 == Poly(TWISTED_VARS, {(1, 0, 0): 3, (0, 1, 0): 1})


def test_bundle_chern_needs_one_point():
    with pytest.raises(ValidationError):
        fm_bundle_chern(FMSpec((1, 1)))


@pytest.mark.parametrize("c0sq,literal,composed", [(2, 9, 12), (0, 0, 0), (-2, 3, 0), (4, 30, 36)])
def test_t4_nodal(c0sq, literal, composed):
    r = fm_t4_nodal(c0sq)
    assert r["literal"].value == literal
    assert r["composed"].value == composed


def test_fm_dimension_unit_coefficients():
    for name in ("t4", "k3", "kodaira"):
        m = preset(name)
        for ms in [(0,), (-1,), (0, -1, 0)]:
            n = len(ms)
            d = fm_expected_dimension(m, 2 * m.euler + 3 * m.signature, FMSpec(ms))
            assert d == 4 * n + m.bplus - 1


def test_fm_dimension_t4_m2():
    assert fm_expected_dimension(preset("t4"), 8, FMSpec((2,))) == 2


@pytest.mark.parametrize("name", ["t4", "k3", "kodaira"])
def test_fm_dimension_no_points_matches(name):
    m = preset(name)
    L = SpincClass(tuple(2 * (k % 3 - 1) for k in range(m.h2_rank)))
    assert fm_expected_dimension(m, m.square(L), None) == expected_dimension(m, L, m.bplus - 1)

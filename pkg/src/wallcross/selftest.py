"""Built-in consistency checks, run by ``wallcross selftest``.

Each check returns ``None`` on success and raises ``AssertionError`` (or
:class:`CrossCheckError`) with a message otherwise.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Callable, List, Tuple

from .blowup import FMSpec, Geometry, fm_normalize, fm_t4_nodal, fm_wcn_n1
from .charclass import (
    CharData, RootVector, chern_closed_form, chern_general, chern_recursion,
    elementary_symmetric, segre_closed_form,
)
from .crossing import WcnValue, kodaira_series_q1, wcn_mixed, wcn_pure
from .exterior import ExtElem, GradedSeries, series_inverse, series_mul
from .index import family_index_oracle, index_character, torus_generators
from .manifold import OneCycle, SpincClass, dump_manifold, expected_dimension, load_manifold
from .presets import preset

__all__ = ["CHECKS", "run_checks", "random_spinc", "random_critical_data"]


def random_spinc(rng: random.Random, rank: int, lo: int = -4, hi: int = 4) -> SpincClass:
    return SpincClass(tuple(rng.randint(lo, hi) for _ in range(rank)))


def random_homogeneous(rng: random.Random, gens, degree: int, lo: int = -3, hi: int = 3) -> ExtElem:
    masks = [m for m in range(1 << len(gens)) if m.bit_count() == degree]
    return ExtElem(gens, {m: Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for m in masks if rng.random() < 0.6})


def random_critical_data(rng: random.Random, b1: int) -> CharData:
    gens = torus_generators(b1)
    return CharData.critical(random_homogeneous(rng, gens, 2), random_homogeneous(rng, gens, 4))


def check_t4_corollary():
    m = preset("t4")
    rng = random.Random(412)
    for _ in range(25):
        L = random_spinc(rng, 6)
        expected = Fraction(m.square(L), 8) + 1
        got = wcn_pure(m, L).value
        assert got == expected, f"t4 {L.components}: {got} != {expected}"


def check_k3_unit():
    m = preset("k3")
    rng = random.Random(3)
    for _ in range(10):
        L = random_spinc(rng, 22)
        assert wcn_pure(m, L).value == 1


def check_kodaira_q1():
    m = preset("kodaira")
    for m3, m4, n2, n3 in product((-2, 0, 2), (-2, 0, 2), range(-2, 3), range(-2, 3)):
        got = wcn_mixed(m, SpincClass((0, 0, m3, m4)), [OneCycle((n3, n2, 0))]).value
        assert got == Fraction(-(m3 * n2 + m4 * n3), 2), (m3, m4, n2, n3, got)


def check_kodaira_series():
    for zeta in ((0, 1, 0), (1, 0, 0), (2, -3, 1)):
        kodaira_series_q1(OneCycle(zeta), (3, 3, 3, 3))


def check_calculus():
    rng = random.Random(45)
    for b1 in (0, 2, 4, 6):
        data = random_critical_data(rng, b1)
        n = b1
        c = chern_closed_form(data, n)
        assert chern_recursion(data, n) == c
        s = segre_closed_form(data, n)
        assert series_inverse(s) == c
        assert series_mul(c, s) == GradedSeries.one(data.generators, n)


def check_newton():
    rng = random.Random(6)
    for _ in range(10):
        roots = [rng.randint(-3, 3) for _ in range(rng.randint(0, 6))]
        n = 6
        c = chern_general(RootVector(roots).char_data(n), n)
        for i in range(n + 1):
            assert c[i].constant() == elementary_symmetric(roots, i), (roots, i)


def check_oracle():
    m = preset("t4")
    rng = random.Random(7)
    for _ in range(5):
        L = random_spinc(rng, 6)
        assert family_index_oracle(L, m) == index_character(m, L), L.components


def check_fm():
    one = WcnValue(1)
    coeffs = []
    for g in (Geometry(C0_sq=1), Geometry(C0_K=1), Geometry(c1_sq=1), Geometry(c2=1)):
        coeffs.append(fm_wcn_n1(FMSpec((2,), g), one).value)
    assert coeffs == [3, 2, 0, 1], coeffs
    g = Geometry(5, -3, 7, 11)
    for m in range(1, 6):
        assert fm_wcn_n1(FMSpec((m,), g), one) == fm_wcn_n1(fm_normalize(FMSpec((-m - 1,), g)), one)
    assert fm_wcn_n1(FMSpec((1,), g), one).value == 0
    nodal = fm_t4_nodal(2)
    assert (nodal["literal"].value, nodal["composed"].value) == (9, 12)


def check_dimensions():
    rng = random.Random(11)
    for name in ("t4", "k3", "kodaira"):
        m = preset(name)
        for _ in range(5):
            L = SpincClass(tuple(2 * v for v in random_spinc(rng, m.h2_rank, -2, 2).components))
            dimB = m.bplus - 1
            d = expected_dimension(m, L, dimB)
            assert d == dimB + Fraction(2 * (m.square(L) - m.signature), 8) - (1 - m.b1 + m.bplus)


def check_roundtrip():
    for name in ("t4", "k3", "kodaira"):
        m = preset(name)
        assert load_manifold(dump_manifold(m)) == m


CHECKS: List[Tuple[str, Callable[[], None]]] = [
    ("t4 corollary", check_t4_corollary),
    ("k3 unit", check_k3_unit),
    ("kodaira q=1 closed form", check_kodaira_q1),
    ("kodaira generating series", check_kodaira_series),
    ("chern/segre identities", check_calculus),
    ("newton identities", check_newton),
    ("family index oracle", check_oracle),
    ("fulton-macpherson n=1", check_fm),
    ("dimension identities", check_dimensions),
    ("preset round trip", check_roundtrip),
]


def run_checks() -> List[Tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            fn()
        except Exception as exc:  # report every failure, keep going
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append((name, True, ""))
    return results

"""Chern character of the family index bundle over the torus of flat connections.

The torus ``T^{b1}`` carries odd generators ``y_1..y_{b1}`` dual to the
``H^1`` basis ``x_1..x_{b1}`` of ``M``; the Poincare line bundle has
``c_1 = sum_i x_i y_i``.  With all ``x`` and ``y`` anticommuting,

    Omega^2 / 2! = - sum_{i<j} x_i x_j y_i y_j
    Omega^4 / 4! = + sum_{i<j<k<l} x_i x_j x_k x_l y_i y_j y_k y_l

so integrating against ``c_1(L)/2`` and ``[M]`` gives

    ch_1 = - sum_{i<j} q_ij y_i y_j,   q_ij = (x_i x_j c_1(L)/2)[M]
    ch_2 =   sum_{i<j<k<l} eps_ijkl y_i y_j y_k y_l.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Tuple

from .errors import ValidationError
from .exterior import ExtElem, GradedSeries, fibre_integrate, series_exp
from .charclass import CharData
from .manifold import ManifoldModel, SpincClass
from .presets import T4_H1, T4_H2_BASIS

__all__ = ["IndexCharacter", "torus_generators", "index_character", "family_index_oracle", "half_class_pairing"]


def torus_generators(b1: int) -> Tuple[str, ...]:
    return tuple(f"y{i + 1}" for i in range(b1))


@dataclass(frozen=True)
class IndexCharacter:
    ch1: ExtElem
    ch2: ExtElem
    dirac_index: Fraction

    def char_data(self) -> CharData:
        return CharData.critical(self.ch1, self.ch2)


def half_class_pairing(m: ManifoldModel, L: SpincClass, i: int, j: int) -> Fraction:
    """``q_ij(L/2) = (x_i x_j c_1(L)/2)[M]``."""
    return Fraction(sum(L.components[a] * m.T(i, j, a) for a in range(m.h2_rank)), 2)


def index_character(m: ManifoldModel, L: SpincClass) -> IndexCharacter:
    m.check_spinc(L)
    gens = torus_generators(m.b1)
    ch1_terms = {}
    for i, j in combinations(range(m.b1), 2):
        q = half_class_pairing(m, L, i, j)
        if q:
            ch1_terms[1 << i | 1 << j] = -q
    ch2_terms = {}
    for idx, v in m.quadruple.items():
        mask = 0
        for k in idx:
            mask |= 1 << k
        ch2_terms[mask] = v
    dirac = Fraction(m.square(L) - m.signature, 8)
    return IndexCharacter(ExtElem(gens, ch1_terms), ExtElem(gens, ch2_terms), dirac)


def family_index_oracle(L: SpincClass, model: ManifoldModel | None = None) -> IndexCharacter:
    """Brute-force ``int_M ch(L/2) ch(Omega)`` for the four-torus fibre.

    Builds the bigraded algebra on ``x1..x4, y1..y4``, expands
    ``exp(c_1(L)/2) * exp(Omega)`` and integrates out the ``x`` generators.
    The A-hat genus of ``T^4`` is 1.
    """
    if model is not None and (model.name != "t4" or model.b1 != 4 or model.h2_rank != 6):
        raise ValidationError(f"family_index_oracle needs the four-torus fibre, got {model.name!r}")
    comps = L.components
    if len(comps) != len(T4_H2_BASIS):
        raise ValidationError(f"T^4 Spin^c class needs {len(T4_H2_BASIS)} components")

    ys = torus_generators(4)
    gens = T4_H1 + ys
    x = [ExtElem.gen(gens, g) for g in T4_H1]
    y = [ExtElem.gen(gens, g) for g in ys]
    half_c1 = ExtElem.zero(gens)
    for coeff, (p, q) in zip(comps, T4_H2_BASIS):
        half_c1 = half_c1 + x[p] * x[q] * Fraction(coeff, 2)
    omega = ExtElem.zero(gens)
    for xi, yi in zip(x, y):
        omega = omega + xi * yi

    # exponentials of nilpotent even elements, via the t = 1 specialisation
    order = len(gens)
    zero = ExtElem.zero(gens)

    def exp(a: ExtElem) -> ExtElem:
        s = series_exp(GradedSeries(gens, order, [zero, a]))
        return sum(s.coefficients[1:], s[0])

    total = fibre_integrate(exp(half_c1) * exp(omega), T4_H1)
    dirac = total.part(0).constant()
    return IndexCharacter(total.part(2), total.part(4), dirac)

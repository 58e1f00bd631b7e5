"""Chern and Segre classes of a virtual bundle from its Chern character.

The total Chern class is handled as a :class:`GradedSeries` ``C(t)`` whose
``t^i`` coefficient is ``c_i``.  In the critical case only ``ch_1`` and
``ch_2`` survive and ``C(t) = exp(ch_1 t - ch_2 t^2)``; in general
``C(t) = exp(sum_i (-1)^(i-1) (i-1)! ch_i t^i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Sequence, Tuple

from .exterior import ExtElem, GradedSeries, ext_mul, series_exp
from .polynomial import Poly, symmetric_reduce

__all__ = [
    "CharData",
    "RootVector",
    "chern_recursion",
    "chern_closed_form",
    "segre_closed_form",
    "chern_general",
    "chern_general_recursion",
    "elementary_symmetric",
    "twisted_sym_power_chern",
    "whitney_total_chern",
    "roots_total_chern",
    "sym_power_roots",
    "TWISTED_VARS",
    "TWISTED_WEIGHTS",
]

# variables of the twisted symmetric power calculus and their complex degrees
TWISTED_VARS = ("c0", "c1M", "c2M")
TWISTED_WEIGHTS = (1, 1, 2)
_SPLIT_VARS = ("c0", "t1", "t2")


@dataclass(frozen=True)
class CharData:
    """Chern character components; ``components[i - 1]`` is ``ch_i``."""

    components: Tuple[ExtElem, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("CharData needs at least ch_1 (possibly zero)")
        gens = comps[0].generators
        for i, c in enumerate(comps, start=1):
            if c.generators != gens:
                raise ValueError(f"ch_{i} has generators {c.generators}, expected {gens}")
            # roots-only data lives in degree 0; torus data in degree 2i
            if gens and not c.is_zero() and c.degrees() != {2 * i}:
                raise ValueError(f"ch_{i} must have pure degree {2 * i}, got {sorted(c.degrees())}")

    @classmethod
    def critical(cls, ch1: ExtElem, ch2: ExtElem) -> "CharData":
        return cls((ch1, ch2))

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.components[0].generators

    def ch(self, i: int) -> ExtElem:
        if 1 <= i <= len(self.components):
            return self.components[i - 1]
        return ExtElem.zero(self.generators)

    @property
    def is_critical(self) -> bool:
        return all(c.is_zero() for c in self.components[2:])


@dataclass(frozen=True)
class RootVector:
    """Formal Chern roots, used to build power-sum Chern characters."""

    roots: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(int(r) for r in self.roots))

    def power_sum(self, k: int) -> int:
        return sum(r ** k for r in self.roots)

    def char_data(self, n: int) -> CharData:
        """``ch_k = p_k / k!`` for ``k = 1..n`` as scalar ExtElems."""
        return CharData(tuple(
            ExtElem.scalar((), Fraction(self.power_sum(k), factorial(k))) for k in range(1, max(n, 1) + 1)
        ))


def _require_critical(data: CharData) -> None:
    if not data.is_critical:
        raise ValueError("data has nonzero ch_i for i > 2; use chern_general")


def chern_recursion(data: CharData, n: int) -> GradedSeries:
    """``c_i = (c_{i-1} ch_1 - 2 c_{i-2} ch_2) / i`` from ``c_0 = 1``."""
    _require_critical(data)
    gens = data.generators
    ch1, ch2 = data.ch(1), data.ch(2)
    c = [ExtElem.one(gens)]
    for i in range(1, n + 1):
        term = ext_mul(c[i - 1], ch1)
        if i >= 2:
            term = term - 2 * ext_mul(c[i - 2], ch2)
        c.append(term / i)
    return GradedSeries(gens, n, c)


def _exp_of(data: CharData, n: int, linear: ExtElem, quadratic: ExtElem) -> GradedSeries:
    gens = data.generators
    return series_exp(GradedSeries(gens, n, [ExtElem.zero(gens), linear, quadratic]))


def chern_closed_form(data: CharData, n: int) -> GradedSeries:
    _require_critical(data)
    return _exp_of(data, n, data.ch(1), -data.ch(2))


def segre_closed_form(data: CharData, n: int) -> GradedSeries:
    _require_critical(data)
    return _exp_of(data, n, -data.ch(1), data.ch(2))


def chern_general(data: CharData, n: int) -> GradedSeries:
    gens = data.generators
    exponent = [ExtElem.zero(gens)]
    for i in range(1, n + 1):
        exponent.append(data.ch(i) * ((-1) ** (i - 1) * factorial(i - 1)))
    return series_exp(GradedSeries(gens, n, exponent))


def chern_general_recursion(data: CharData, n: int) -> GradedSeries:
    """``i c_i = sum_k (-1)^(k-1) k! c_{i-k} ch_k``; the derivative of the
    exponential form."""
    gens = data.generators
    c = [ExtElem.one(gens)]
    for i in range(1, n + 1):
        acc = ExtElem.zero(gens)
        for k in range(1, i + 1):
            chk = data.ch(k)
            if chk.is_zero():
                continue
            acc = acc + ext_mul(c[i - k], chk) * ((-1) ** (k - 1) * factorial(k))
        c.append(acc / i)
    return GradedSeries(gens, n, c)


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """``e_k`` by brute force over all k-subsets."""
    return sum(prod(sub) for sub in combinations(values, k))


# -- splitting principle for twisted symmetric powers ---------------------

def sym_power_roots(j: int) -> list:
    """Chern roots ``a t1 + b t2 + c0`` (a + b = j) of ``S^j(E) (x) C0`` for a
    rank-two ``E`` with roots ``t1, t2``, as linear Polys in (c0, t1, t2)."""
    c0 = Poly.var(_SPLIT_VARS, "c0")
    t1 = Poly.var(_SPLIT_VARS, "t1")
    t2 = Poly.var(_SPLIT_VARS, "t2")
    return [t1 * a + t2 * (j - a) + c0 for a in range(j, -1, -1)]


def _reduce(p: Poly) -> Poly:
    q = symmetric_reduce(p, ("t1", "t2"), ("c1M", "c2M"))
    # q is over (c0, c1M, c2M) already, in that order
    return Poly(TWISTED_VARS, q.terms)


def roots_total_chern(roots: Sequence[Poly]) -> Poly:
    """``prod (1 + r)`` over the given roots, reduced to (c0, c1M, c2M)."""
    total = Poly.const(_SPLIT_VARS, 1)
    for r in roots:
        total = total * (r + 1)
    return _reduce(total)


def twisted_sym_power_chern(j: int) -> Poly:
    """Total Chern class of ``S^j(E) (x) C0`` in the basis (c0, c1M, c2M).

    ``c1M = t1 + t2`` and ``c2M = t1 t2`` are the Chern classes of the rank-two
    bundle ``E``; ``c0`` is the first Chern class of the twisting line.  No
    truncation is applied.
    """
    if j < 0:
        raise ValueError("symmetric power must be non-negative")
    return roots_total_chern(sym_power_roots(j))


def whitney_total_chern(js: Sequence[int]) -> Poly:
    """Total Chern class of ``(+)_j S^j(E) (x) C0`` as a product of summands."""
    total = Poly.const(TWISTED_VARS, 1)
    for j in js:
        total = total * twisted_sym_power_chern(j)
    return total

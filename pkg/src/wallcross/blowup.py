"""Family wall crossing for point blow-ups over Fulton-MacPherson spaces.

A Spin^c structure ``L0 - sum_i (2 m_i + 1) E_i`` on the blown-up fibres has
wall-crossing number ``int_{M[n]} c_{2n}(W) * delta(L0)`` where
``W = (+)_{i, 0 <= j < m_i} S^j(V_i^*) (x) (C0 - sum_{s<i} m_s E_s)``.
Only ``n = 1`` is evaluated (``M[1] = M``, ``V_1 = TM``); for larger ``n``
the summands are enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .charclass import TWISTED_VARS, TWISTED_WEIGHTS, whitney_total_chern
from .crossing import WcnValue
from .errors import ValidationError
from .manifold import ManifoldModel
from .polynomial import Poly

__all__ = [
    "Geometry",
    "FMSpec",
    "Twist",
    "FMSummand",
    "fm_summands",
    "fm_normalize",
    "fm_bundle_chern",
    "fm_wcn_n1",
    "fm_wcn_n1_mixed",
    "fm_t4_nodal",
    "fm_expected_dimension",
    "T4_GEOMETRY",
]


@dataclass(frozen=True)
class Geometry:
    """Degree-four pairings on ``M``: ``C0^2``, ``C0.c1(M)``, ``c1(M)^2``, ``c2(M)``."""

    C0_sq: int = 0
    C0_K: int = 0
    c1_sq: int = 0
    c2: int = 0

    def evaluate(self, top: Poly) -> Fraction:
        """Integrate a weight-two polynomial in (c0, c1M, c2M) over ``M``."""
        table = {(2, 0, 0): self.C0_sq, (1, 1, 0): self.C0_K, (0, 2, 0): self.c1_sq, (0, 0, 1): self.c2}
        total = Fraction(0)
        for exp, c in top.terms.items():
            if exp not in table:
                raise ValueError(f"monomial {exp} is not of degree four")
            total += c * table[exp]
        return total


T4_GEOMETRY = Geometry(C0_sq=0, C0_K=0, c1_sq=0, c2=0)


@dataclass(frozen=True)
class FMSpec:
    """Blow-up data: the coefficients ``2 m_i + 1`` of ``E_i`` and the geometry."""

    multiplicities: Tuple[int, ...]
    geometry: Geometry = field(default_factory=Geometry)

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(v) for v in self.multiplicities))
        if not self.multiplicities:
            raise ValidationError("FMSpec needs at least one blow-up point")

    @property
    def n(self) -> int:
        return len(self.multiplicities)


@dataclass(frozen=True)
class Twist:
    """The line class ``C0 + sum_s exceptional[s] E_{s+1}``."""

    exceptional: Tuple[int, ...] = ()

    def __str__(self) -> str:
        out = "C0"
        for s, k in enumerate(self.exceptional, start=1):
            if k:
                out += f" {'-' if k < 0 else '+'} {abs(k) if abs(k) != 1 else ''}E{s}"
        return out


@dataclass(frozen=True)
class FMSummand:
    point_index: int
    sym_power: int
    twist: Twist

    @property
    def rank(self) -> int:
        return self.sym_power + 1


def fm_normalize(spec: FMSpec) -> FMSpec:
    """Replace each negative coefficient ``2m + 1`` by its absolute value."""
    return replace(spec, multiplicities=tuple(m if m >= 0 else -m - 1 for m in spec.multiplicities))


def fm_summands(spec: FMSpec) -> List[FMSummand]:
    ms = spec.multiplicities
    if any(m < 0 for m in ms):
        raise ValidationError("normalize the spec first (negative multiplicity)")
    out = []
    for i, m in enumerate(ms, start=1):
        twist = Twist(tuple(-ms[s] for s in range(i - 1)))
        for j in range(m):
            out.append(FMSummand(i, j, twist))
    return out


def fm_bundle_chern(spec: FMSpec) -> Poly:
    """Total Chern class of the n = 1 bundle ``(+)_{j<m} S^j(TM) (x) C0``."""
    if spec.n != 1:
        raise ValidationError("characteristic classes are only available for one blow-up point")
    return whitney_total_chern([s.sym_power for s in fm_summands(fm_normalize(spec))])


def fm_wcn_n1(spec: FMSpec, delta0: WcnValue) -> WcnValue:
    """``delta0 * int_M c_2((+)_{j<m} S^j(TM) (x) C0)``."""
    c2 = fm_bundle_chern(spec).weighted_part(TWISTED_WEIGHTS, 2)
    return WcnValue(spec.geometry.evaluate(c2) * delta0.value, delta0.convention)


def fm_wcn_n1_mixed(spec: FMSpec, delta0: WcnValue, eta_degree: int,
                    eta_pairing: Optional[Tuple[int, int]] = None) -> WcnValue:
    """Insert a class ``eta`` of real degree 0, 2 or 4 on ``M[1] = M``.

    Degree 2 needs ``eta_pairing = (eta.C0, eta.c1(M))``; degree 4 is the
    fundamental cohomology class.
    """
    if eta_degree == 0:
        return fm_wcn_n1(spec, delta0)
    if eta_degree == 4:
        return WcnValue(delta0.value, delta0.convention)
    if eta_degree == 2:
        if eta_pairing is None:
            raise ValidationError("degree-two insertion needs its pairings with C0 and c1(M)")
        c1 = fm_bundle_chern(spec).weighted_part(TWISTED_WEIGHTS, 1)
        a, b = eta_pairing
        value = c1.coefficient((1, 0, 0)) * a + c1.coefficient((0, 1, 0)) * b
        return WcnValue(value * delta0.value, delta0.convention)
    raise ValidationError(f"unsupported insertion degree {eta_degree}; use 0, 2 or 4")


def fm_t4_nodal(C0_sq: int) -> Dict[str, WcnValue]:
    """Nodal-curve count on the four-torus for ``m = 2``, two ways.

    ``literal`` is ``(C0^2 + 1)/2 * 3 C0^2`` as printed; ``composed`` feeds the
    four-torus critical number ``(2 C0)^2/8 + 1`` into the blow-up formula.
    The two disagree; both are returned.
    """
    literal = Fraction(C0_sq + 1, 2) * 3 * C0_sq
    delta0 = WcnValue(Fraction(4 * C0_sq, 8) + 1)
    composed = fm_wcn_n1(FMSpec((2,), replace(T4_GEOMETRY, C0_sq=C0_sq)), delta0)
    return {"literal": WcnValue(literal), "composed": composed}


def fm_expected_dimension(m: ManifoldModel, L0_sq: int, spec: Optional[FMSpec],
                          dimB_extra: Optional[int] = None) -> Fraction:
    """``(L0^2 - sum (2m_i+1)^2 - (2e + 3 sigma) + n)/4 + 4n + dimB_extra``.

    ``spec=None`` means no blow-up points; ``dimB_extra`` defaults to ``b+ - 1``.
    """
    ms = spec.multiplicities if spec is not None else ()
    n = len(ms)
    extra = m.bplus - 1 if dimB_extra is None else dimB_extra
    num = L0_sq - sum((2 * k + 1) ** 2 for k in ms) - (2 * m.euler + 3 * m.signature) + n
    return Fraction(num, 4) + 4 * n + extra

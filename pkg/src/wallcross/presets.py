"""Built-in manifold models: the four-torus, K3 and the primary Kodaira surface.

Cup products of T^4 and the Kodaira surface are computed here by wedging
invariant differential forms against the declared volume form, rather than
typed in.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Sequence, Tuple

from .errors import ValidationError
from .exterior import ExtElem, top_coefficient
from .manifold import ManifoldModel

__all__ = ["preset", "PRESETS", "T4_H1", "T4_H2_BASIS", "KODAIRA_H1", "E8"]

# T^4: H^1 basis dx1..dx4, H^2 basis dx_p dx_q in lexicographic order
T4_H1 = ("x1", "x2", "x3", "x4")
T4_H2_BASIS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(4), 2))

# Kodaira surface: coordinates ordered so dx dy dz dt is the volume form
KODAIRA_COORDS = ("dx", "dy", "dz", "dt")
KODAIRA_H1 = ("dx", "dy", "dt")

E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)


def _products(h1: Sequence[ExtElem], h2: Sequence[ExtElem]):
    """Intersection, triple and quadruple tables of forms over the volume."""
    b1, b2 = len(h1), len(h2)
    inter = [[int(top_coefficient(h2[a] * h2[b])) for b in range(b2)] for a in range(b2)]
    triple = {}
    for i, j in combinations(range(b1), 2):
        for a in range(b2):
            v = top_coefficient(h1[i] * h1[j] * h2[a])
            if v:
                triple[(i, j, a)] = int(v)
    quadruple = {}
    for idx in combinations(range(b1), 4):
        f = h1[idx[0]] * h1[idx[1]] * h1[idx[2]] * h1[idx[3]]
        v = top_coefficient(f)
        if v:
            quadruple[idx] = int(v)
    return inter, triple, quadruple


def _t4() -> ManifoldModel:
    h1 = [ExtElem.gen(T4_H1, g) for g in T4_H1]
    h2 = [h1[p] * h1[q] for p, q in T4_H2_BASIS]
    inter, triple, quadruple = _products(h1, h2)
    return ManifoldModel("t4", b1=4, bplus=3, euler=0, signature=0, h2_rank=6,
                         intersection=inter, triple=triple, quadruple=quadruple)


def _k3() -> ManifoldModel:
    hyperbolic = ((0, 1), (1, 0))
    inter = [[0] * 22 for _ in range(22)]
    for block in range(2):
        for a in range(8):
            for b in range(8):
                inter[8 * block + a][8 * block + b] = -E8[a][b]
    for h in range(3):
        base = 16 + 2 * h
        for a in range(2):
            for b in range(2):
                inter[base + a][base + b] = hyperbolic[a][b]
    return ManifoldModel("k3", b1=0, bplus=3, euler=24, signature=-16, h2_rank=22, intersection=inter)


def _kodaira_tables(lam_x: int):
    dx, dy, dz, dt = (ExtElem.gen(KODAIRA_COORDS, g) for g in KODAIRA_COORDS)
    h1 = [dx, dy, dt]
    # dx ^ (dz - lam*x dy) with the point value lam*x held as a number
    h2 = [dx * dt, dy * dt, dy * dz, dx * (dz - dy * lam_x)]
    return _products(h1, h2)


def _kodaira() -> ManifoldModel:
    tables = _kodaira_tables(0)
    for lam_x in (1, 2, -3):
        if _kodaira_tables(lam_x) != tables:
            raise ValidationError("Kodaira cup products depend on lambda*x")
    inter, triple, quadruple = tables
    return ManifoldModel("kodaira", b1=3, bplus=2, euler=0, signature=0, h2_rank=4,
                         intersection=inter, triple=triple, quadruple=quadruple)


PRESETS = {"t4": _t4, "k3": _k3, "kodaira": _kodaira}


@lru_cache(maxsize=None)
def preset(name: str) -> ManifoldModel:
    try:
        build = PRESETS[name]
    except KeyError:
        raise ValidationError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return build()

"""Cup-product presentation of a closed oriented four-manifold.

A model stores ``b1``, ``b+``, ``e``, ``sigma``, the intersection form on a
chosen basis ``e_1..e_{b2}`` of ``H^2``, the triple products
``T[i][j][a] = (x_i x_j e_a)[M]`` for a basis ``x_1..x_{b1}`` of ``H^1`` and
the quadruple products ``eps[i][j][k][l] = (x_i x_j x_k x_l)[M]``.

File format::

    [manifold]
    name = t4
    b1 = 4
    ...
    [intersection]
    0 0 0 0 0 1
    ...
    [triple]
    1 2 6 1          # i j a value, 1-based, i < j
    [quadruple]
    1 2 3 4 1        # i j k l value, 1-based, i < j < k < l
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import ParityError, ValidationError

__all__ = [
    "ManifoldModel",
    "SpincClass",
    "OneCycle",
    "load_manifold",
    "dump_manifold",
    "read_manifold",
    "expected_dimension",
    "form_signature",
    "permutation_sign",
]

HEADER_KEYS = ("name", "b1", "bplus", "euler", "signature", "h2_rank")


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of sorting ``seq``; 0 if it has repeats."""
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for p, q in itertools.combinations(range(len(seq)), 2) if seq[p] > seq[q])
    return -1 if inv & 1 else 1


def form_signature(matrix: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric form over Q.

    Congruence diagonalisation: pivot on a nonzero diagonal entry, or make one
    by adding a row/column pair when only off-diagonal entries remain.
    """
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j gives diagonal entry 2 a_ij (a_jj = a_ii = 0)
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for j in active:
                    a[i][j] -= f * a[p][j]
    return pos, neg, n - pos - neg


@dataclass(frozen=True)
class SpincClass:
    """``c_1`` of the determinant line in the ``H^2`` basis."""

    components: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(v) for v in self.components))

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class OneCycle:
    """Coordinates of the dual one-form of an ``H_1`` class in the ``H^1`` basis."""

    components: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(v) for v in self.components))

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ManifoldModel:
    """Validated cohomological data of a closed oriented four-manifold.

    ``triple`` and ``quadruple`` hold only canonical (i < j, i < j < k < l),
    0-based, nonzero entries; use :meth:`T` and :meth:`eps` for full tensors.
    """

    name: str
    b1: int
    bplus: int
    euler: int
    signature: int
    h2_rank: int
    intersection: Tuple[Tuple[int, ...], ...]
    triple: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    quadruple: Dict[Tuple[int, int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "intersection", tuple(tuple(int(v) for v in row) for row in self.intersection))
        object.__setattr__(self, "triple", {tuple(k): int(v) for k, v in self.triple.items() if v})
        object.__setattr__(self, "quadruple", {tuple(k): int(v) for k, v in self.quadruple.items() if v})
        self.validate()

    def validate(self) -> None:
        b1, b2 = self.b1, self.h2_rank
        if min(b1, self.bplus, b2) < 0:
            raise ValidationError("b1, bplus and h2_rank must be non-negative")
        if b2 != self.euler - 2 + 2 * b1:
            raise ValidationError(
                f"Euler identity fails: h2_rank={b2} but euler - 2 + 2*b1 = {self.euler - 2 + 2 * b1}")
        if self.bplus > b2:
            raise ValidationError(f"bplus={self.bplus} exceeds h2_rank={b2}")
        q = self.intersection
        if len(q) != b2 or any(len(row) != b2 for row in q):
            raise ValidationError(f"intersection matrix must be {b2}x{b2}")
        for i in range(b2):
            for j in range(i + 1, b2):
                if q[i][j] != q[j][i]:
                    raise ValidationError(f"intersection matrix not symmetric at ({i + 1},{j + 1})")
        pos, neg, zero = form_signature(q)
        if zero:
            raise ValidationError(f"intersection form is degenerate (nullity {zero})")
        if pos != self.bplus:
            raise ValidationError(f"intersection form has {pos} positive directions, bplus={self.bplus}")
        if pos - neg != self.signature:
            raise ValidationError(f"signature of intersection form is {pos - neg}, declared {self.signature}")
        for (i, j, a) in self.triple:
            if not (0 <= i < j < b1 and 0 <= a < b2):
                raise ValidationError(f"triple entry {(i + 1, j + 1, a + 1)} out of range or not i<j")
        for idx in self.quadruple:
            i, j, k, l = idx
            if not (0 <= i < j < k < l < b1):
                raise ValidationError(f"quadruple entry {tuple(v + 1 for v in idx)} out of range or not increasing")

    # -- tensors ------------------------------------------------------------
    def T(self, i: int, j: int, a: int) -> int:
        """``(x_i x_j e_a)[M]``, 0-based, antisymmetric in (i, j)."""
        if i == j:
            return 0
        if i < j:
            return self.triple.get((i, j, a), 0)
        return -self.triple.get((j, i, a), 0)

    def eps(self, i: int, j: int, k: int, l: int) -> int:
        """``(x_i x_j x_k x_l)[M]``, 0-based, totally antisymmetric."""
        idx = (i, j, k, l)
        s = permutation_sign(idx)
        if not s:
            return 0
        return s * self.quadruple.get(tuple(sorted(idx)), 0)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        q = self.intersection
        return sum(u[a] * q[a][b] * v[b] for a in range(self.h2_rank) for b in range(self.h2_rank) if u[a] and v[b])

    def square(self, L: SpincClass) -> int:
        self.check_spinc(L)
        return self.pair(L.components, L.components)

    def check_spinc(self, L: SpincClass) -> None:
        if len(L.components) != self.h2_rank:
            raise ValidationError(f"Spin^c class has {len(L.components)} components, h2_rank={self.h2_rank}")

    def check_cycle(self, z: OneCycle) -> None:
        if len(z.components) != self.b1:
            raise ValidationError(f"one-cycle has {len(z.components)} components, b1={self.b1}")


def expected_dimension(m: ManifoldModel, L: SpincClass, dimB: int) -> int:
    """``dimB + (c1(L)^2 - (2e + 3 sigma)) / 4``."""
    num = m.square(L) - (2 * m.euler + 3 * m.signature)
    if num % 4:
        raise ParityError(
            f"c1(L)^2 - (2e + 3 sigma) = {num} is not divisible by 4; "
            "the class is not characteristic")
    return dimB + num // 4


# -- file format ------------------------------------------------------------

def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValidationError(f"line {lineno}: expected an integer, got {tok!r}") from None


def load_manifold(text: str) -> ManifoldModel:
    header: Dict[str, object] = {}
    rows: List[List[int]] = []
    triple: Dict[Tuple[int, int, int], int] = {}
    quadruple: Dict[Tuple[int, int, int, int], int] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in ("manifold", "intersection", "triple", "quadruple"):
                raise ValidationError(f"line {lineno}: unknown section [{section}]")
            continue
        if section is None:
            raise ValidationError(f"line {lineno}: content before any section")
        if section == "manifold":
            if "=" not in line:
                raise ValidationError(f"line {lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in HEADER_KEYS:
                raise ValidationError(f"line {lineno}: unknown key {key!r}")
            header[key] = value if key == "name" else _int(value, lineno)
            continue
        toks = [_int(t, lineno) for t in line.split()]
        if section == "intersection":
            rows.append(toks)
        elif section == "triple":
            if len(toks) != 4:
                raise ValidationError(f"line {lineno}: triple lines are 'i j a v'")
            i, j, a, v = toks
            if not i < j:
                raise ValidationError(f"line {lineno}: triple indices need i < j")
            key = (i - 1, j - 1, a - 1)
            if key in triple:
                raise ValidationError(f"line {lineno}: duplicate triple entry")
            triple[key] = v
        else:
            if len(toks) != 5:
                raise ValidationError(f"line {lineno}: quadruple lines are 'i j k l v'")
            *idx, v = toks
            if not idx[0] < idx[1] < idx[2] < idx[3]:
                raise ValidationError(f"line {lineno}: quadruple indices need i < j < k < l")
            key = tuple(t - 1 for t in idx)
            if key in quadruple:
                raise ValidationError(f"line {lineno}: duplicate quadruple entry")
            quadruple[key] = v
    missing = [k for k in HEADER_KEYS if k not in header]
    if missing:
        raise ValidationError(f"[manifold] section is missing {', '.join(missing)}")
    nums = {k: header[k] for k in HEADER_KEYS if k != "name"}
    for (i, j, a) in triple:
        if j >= nums["b1"] or a >= nums["h2_rank"] or min(i, a) < 0:
            raise ValidationError(f"triple entry {(i + 1, j + 1, a + 1)} out of range")
    return ManifoldModel(name=header["name"], intersection=rows, triple=triple, quadruple=quadruple, **nums)


def read_manifold(path) -> ManifoldModel:
    with open(path, encoding="utf-8") as fh:
        return load_manifold(fh.read())


def dump_manifold(m: ManifoldModel) -> str:
    out = ["[manifold]", f"name = {m.name}"]
    out += [f"{k} = {getattr(m, k)}" for k in HEADER_KEYS[1:]]
    out.append("")
    out.append("[intersection]")
    out += [" ".join(str(v) for v in row) for row in m.intersection]
    out.append("")
    out.append("[triple]")
    out += [f"{i + 1} {j + 1} {a + 1} {v}" for (i, j, a), v in sorted(m.triple.items())]
    out.append("")
    out.append("[quadruple]")
    out += [" ".join(str(t + 1) for t in idx) + f" {v}" for idx, v in sorted(m.quadruple.items())]
    return "\n".join(out) + "\n"

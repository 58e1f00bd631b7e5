"""Exterior algebra on odd generators and truncated series in an even variable.

Monomials are bit-masks over an ordered tuple of generator names; bit ``k``
stands for ``generators[k]``.  A monomial is always read in increasing bit
order, so ``0b011`` over ``("y1", "y2")`` is ``y1*y2``.  Coefficients are
:class:`fractions.Fraction`.

All objects are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]

__all__ = [
    "ExtElem",
    "GradedSeries",
    "ext_mul",
    "series_mul",
    "series_exp",
    "series_inverse",
    "top_coefficient",
    "fibre_integrate",
    "monomial_sign",
]


def monomial_sign(a: int, b: int) -> int:
    """Koszul sign of concatenating sorted monomials ``a`` and ``b``.

    Counts the pairs (i in a, j in b) with i > j, i.e. the transpositions
    needed to sort the concatenated word.  Returns 0 when they overlap.
    """
    if a & b:
        return 0
    inversions = 0
    rest = b
    while rest:
        low = rest & -rest
        j = low.bit_length() - 1
        inversions += (a >> (j + 1)).bit_count()
        rest ^= low
    return -1 if inversions & 1 else 1


class ExtElem:
    """Element of the exterior algebra over ``Q`` on named odd generators."""

    __slots__ = ("_gens", "_terms")

    def __init__(self, generators: Sequence[str], terms: Mapping[int, Scalar] | None = None):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated generator names in {gens}")
        full = (1 << len(gens)) - 1
        clean: Dict[int, Fraction] = {}
        for mask, c in (terms or {}).items():
            if mask < 0 or mask & ~full:
                raise ValueError(f"monomial {mask:#b} is not over generators {gens}")
            c = Fraction(c)
            if c:
                clean[mask] = c
        self._gens = gens
        self._terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, generators: Sequence[str]) -> "ExtElem":
        return cls(generators)

    @classmethod
    def one(cls, generators: Sequence[str]) -> "ExtElem":
        return cls(generators, {0: 1})

    @classmethod
    def scalar(cls, generators: Sequence[str], value: Scalar) -> "ExtElem":
        return cls(generators, {0: value})

    @classmethod
    def gen(cls, generators: Sequence[str], name: str) -> "ExtElem":
        gens = tuple(generators)
        return cls(gens, {1 << gens.index(name): 1})

    @classmethod
    def monomial(cls, generators: Sequence[str], names: Iterable[str], coeff: Scalar = 1) -> "ExtElem":
        """The product of ``names`` in the order given, times ``coeff``."""
        gens = tuple(generators)
        out = cls.scalar(gens, coeff)
        for name in names:
            out = out * cls.gen(gens, name)
        return out

    # -- accessors --------------------------------------------------------
    @property
    def generators(self) -> Tuple[str, ...]:
        return self._gens

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {m.bit_count() for m in self._terms}

    def degree(self) -> int | None:
        """Odd-generator degree if homogeneous, ``None`` for zero or mixed."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def part(self, degree: int) -> "ExtElem":
        return ExtElem(self._gens, {m: c for m, c in self._terms.items() if m.bit_count() == degree})

    def constant(self) -> Fraction:
        return self.coefficient(0)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "ExtElem") -> None:
        if self._gens != other._gens:
            raise ValueError(f"generator sets differ: {self._gens} vs {other._gens}")

    def _coerce(self, other) -> "ExtElem":
        if isinstance(other, ExtElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return ExtElem.scalar(self._gens, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return ExtElem(self._gens, terms)

    __radd__ = __add__

    def __neg__(self) -> "ExtElem":
        return ExtElem(self._gens, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExtElem(self._gens, {m: c * other for m, c in self._terms.items()})
        if isinstance(other, ExtElem):
            return ext_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "ExtElem":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = ExtElem.one(self._gens)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtElem.scalar(self._gens, other)
        if not isinstance(other, ExtElem):
            return NotImplemented
        return self._gens == other._gens and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._gens, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"ExtElem({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mask, c in sorted(self._terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0])):
            word = "*".join(g for k, g in enumerate(self._gens) if mask >> k & 1)
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append("-" + word)
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts).replace("+ -", "- ")


def ext_mul(a: ExtElem, b: ExtElem) -> ExtElem:
    """Graded-commutative product with Koszul signs."""
    a._check(b)
    terms: Dict[int, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            s = monomial_sign(ma, mb)
            if s:
                m = ma | mb
                terms[m] = terms.get(m, 0) + s * ca * cb
    return ExtElem(a._gens, terms)


def top_coefficient(a: ExtElem) -> Fraction:
    """Coefficient of the product of all generators, in their listed order."""
    return a.coefficient((1 << len(a.generators)) - 1)


def fibre_integrate(a: ExtElem, fibre_generators: Sequence[str]) -> ExtElem:
    """Integrate out ``fibre_generators`` (the fibre top form, in list order).

    Each monomial containing every fibre generator is rewritten as
    (fibre word in the order of ``fibre_generators``) * (remaining word) and
    the remaining word, with the accumulated sign, is kept.  The result lives
    on the remaining generators.
    """
    gens = a.generators
    missing = [g for g in fibre_generators if g not in gens]
    if missing:
        raise ValueError(f"fibre generators {missing} are not among {gens}")
    if len(set(fibre_generators)) != len(fibre_generators):
        raise ValueError("repeated fibre generators")

    idx = [gens.index(g) for g in fibre_generators]
    fibre_mask = 0
    for k in idx:
        fibre_mask |= 1 << k
    # sign of the permutation taking the canonical order to the listed order
    inversions = sum(1 for p in range(len(idx)) for q in range(p + 1, len(idx)) if idx[p] > idx[q])
    order_sign = -1 if inversions & 1 else 1

    base = [k for k in range(len(gens)) if not fibre_mask >> k & 1]
    base_gens = tuple(gens[k] for k in base)
    terms: Dict[int, Fraction] = {}
    for mask, c in a._terms.items():
        if mask & fibre_mask != fibre_mask:
            continue
        rest = mask & ~fibre_mask
        # canonical word == sign(fibre, rest) * fibre-word * rest-word
        s = monomial_sign(fibre_mask, rest) * order_sign
        new = 0
        for pos, k in enumerate(base):
            if rest >> k & 1:
                new |= 1 << pos
        terms[new] = terms.get(new, 0) + s * c
    return ExtElem(base_gens, terms)


class GradedSeries:
    """Polynomial in a central even variable ``t`` with ExtElem coefficients,
    truncated above ``truncation_order``."""

    __slots__ = ("_gens", "_order", "_coeffs")

    def __init__(self, generators: Sequence[str], truncation_order: int, coefficients: Sequence[ExtElem] = ()):
        gens = tuple(generators)
        if truncation_order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = []
        for i in range(truncation_order + 1):
            if i < len(coefficients):
                c = coefficients[i]
                if not isinstance(c, ExtElem):
                    c = ExtElem.scalar(gens, c)
                elif c.generators != gens:
                    raise ValueError(f"coefficient {i} has generators {c.generators}, expected {gens}")
                coeffs.append(c)
            else:
                coeffs.append(ExtElem.zero(gens))
        self._gens = gens
        self._order = truncation_order
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls, generators: Sequence[str], truncation_order: int) -> "GradedSeries":
        return cls(generators, truncation_order, [ExtElem.one(generators)])

    @property
    def generators(self) -> Tuple[str, ...]:
        return self._gens

    @property
    def truncation_order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> Tuple[ExtElem, ...]:
        return self._coeffs

    def __getitem__(self, i: int) -> ExtElem:
        if 0 <= i <= self._order:
            return self._coeffs[i]
        return ExtElem.zero(self._gens)

    def truncate(self, order: int) -> "GradedSeries":
        return GradedSeries(self._gens, min(order, self._order), self._coeffs)

    def _check(self, other: "GradedSeries") -> None:
        if self._gens != other._gens:
            raise ValueError(f"generator sets differ: {self._gens} vs {other._gens}")

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check(other)
        n = min(self._order, other._order)
        return GradedSeries(self._gens, n, [self[i] + other[i] for i in range(n + 1)])

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(self._gens, self._order, [-c for c in self._coeffs])

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return GradedSeries(self._gens, self._order, [c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self._gens, self._order, self._coeffs) == (other._gens, other._order, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._gens, self._order, self._coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self._coeffs) if not c.is_zero())
        return f"GradedSeries[{self._order}]({body or '0'})"


def series_mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """Cauchy product, truncated to the smaller of the two orders."""
    a._check(b)
    n = min(a.truncation_order, b.truncation_order)
    out = []
    for k in range(n + 1):
        acc = ExtElem.zero(a.generators)
        for i in range(k + 1):
            if a[i].is_zero() or b[k - i].is_zero():
                continue
            acc = acc + ext_mul(a[i], b[k - i])
        out.append(acc)
    return GradedSeries(a.generators, n, out)


def series_exp(a: GradedSeries) -> GradedSeries:
    """``sum a^k / k!``; terminates since ``a`` has no constant term."""
    if not a[0].is_zero():
        raise ValueError("series_exp needs a zero constant term")
    n = a.truncation_order
    out = GradedSeries.one(a.generators, n)
    power = GradedSeries.one(a.generators, n)
    for k in range(1, n + 1):
        power = series_mul(power, a)
        if all(c.is_zero() for c in power.coefficients):
            break
        out = out + power * Fraction(1, factorial(k))
    return out


def series_inverse(a: GradedSeries) -> GradedSeries:
    """Multiplicative inverse of a series whose constant term is 1.

    Solves ``sum_{i<=k} a_i b_{k-i} = [k == 0]`` for ``b`` order by order.
    """
    gens = a.generators
    if a[0] != ExtElem.one(gens):
        raise ValueError("series_inverse needs the ring unit as constant term")
    n = a.truncation_order
    b = [ExtElem.one(gens)]
    for k in range(1, n + 1):
        acc = ExtElem.zero(gens)
        for i in range(1, k + 1):
            acc = acc + ext_mul(a[i], b[k - i])
        b.append(-acc)
    return GradedSeries(gens, n, b)

"""Commutative polynomials over Q in named variables (sparse exponent dicts)."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Exponent = Tuple[int, ...]

__all__ = ["Poly", "symmetric_reduce"]


class Poly:
    __slots__ = ("_vars", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar] | None = None):
        vs = tuple(variables)
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(vs) or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for variables {vs}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._vars = vs
        self._terms = clean

    @classmethod
    def const(cls, variables: Sequence[str], value: Scalar) -> "Poly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "Poly":
        vs = tuple(variables)
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls(vs, {tuple(exp): 1})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def weighted_part(self, weights: Sequence[int], degree: int) -> "Poly":
        """Terms whose weighted degree equals ``degree``."""
        return Poly(self._vars, {
            e: c for e, c in self._terms.items()
            if sum(w * k for w, k in zip(weights, e)) == degree
        })

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for name, k in zip(self._vars, exp):
                if k:
                    term *= Fraction(values[name]) ** k
            total += term
        return total

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other._vars != self._vars:
                raise ValueError(f"variables differ: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self._vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self._vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self._vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(self._vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self._vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._vars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            word = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, exp) if k)
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts)


def symmetric_reduce(p: Poly, pair: Tuple[str, str], elementary: Tuple[str, str]) -> Poly:
    """Rewrite ``p``, symmetric in the two variables ``pair``, in terms of
    their elementary symmetric functions named ``elementary`` (e1, e2).

    The remaining variables of ``p`` are carried along unchanged.  Raises
    ``ValueError`` if ``p`` is not symmetric in ``pair``.
    """
    a, b = pair
    ia, ib = p.variables.index(a), p.variables.index(b)
    others = [k for k in range(len(p.variables)) if k not in (ia, ib)]
    out_vars = tuple(p.variables[k] for k in others) + tuple(elementary)
    e1 = Poly.var(p.variables, a) + Poly.var(p.variables, b)
    e2 = Poly.var(p.variables, a) * Poly.var(p.variables, b)

    rest = p
    result: Dict[Exponent, Fraction] = {}
    while not rest.is_zero():
        # leading term: largest exponent of a, ties broken by total degree
        exp, c = max(rest.terms.items(), key=lambda kv: (kv[0][ia], kv[0][ib], kv[0]))
        pa, pb = exp[ia], exp[ib]
        if pa < pb:
            raise ValueError(f"polynomial is not symmetric in {pair}")
        mono = [0] * len(p.variables)
        for k in others:
            mono[k] = exp[k]
        shift = Poly(p.variables, {tuple(mono): c})
        rest = rest - shift * e1 ** (pa - pb) * e2 ** pb
        key = tuple(exp[k] for k in others) + (pa - pb, pb)
        result[key] = result.get(key, 0) + c
    return Poly(out_vars, result)

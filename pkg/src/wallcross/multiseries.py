"""Truncated multivariate power series with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]

__all__ = ["MultiSeries"]


class MultiSeries:
    """Power series in ``variables``, keeping exponent ``e_k <= orders[k]``."""

    __slots__ = ("_vars", "_orders", "_coeffs")

    def __init__(self, variables: Sequence[str], orders: Sequence[int], coefficients: Mapping[Tuple[int, ...], Scalar] | None = None):
        vs = tuple(variables)
        orders = tuple(int(o) for o in orders)
        if len(orders) != len(vs):
            raise ValueError("one truncation order per variable")
        if any(o < 0 for o in orders):
            raise ValueError("truncation orders must be non-negative")
        coeffs: Dict[Tuple[int, ...], Fraction] = {}
        for exp, c in (coefficients or {}).items():
            exp = tuple(exp)
            if len(exp) != len(vs) or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp}")
            if any(e > o for e, o in zip(exp, orders)):
                continue
            c = Fraction(c)
            if c:
                coeffs[exp] = c
        self._vars = vs
        self._orders = orders
        self._coeffs = coeffs

    @classmethod
    def from_terms(cls, variables, orders, terms: Mapping[Tuple[int, ...], Scalar]) -> "MultiSeries":
        return cls(variables, orders, terms)

    @classmethod
    def one(cls, variables, orders) -> "MultiSeries":
        return cls(variables, orders, {(0,) * len(variables): 1})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._vars

    @property
    def orders(self) -> Tuple[int, ...]:
        return self._orders

    def exponents(self) -> Iterator[Tuple[int, ...]]:
        """Every exponent vector inside the truncation box, lexicographically."""
        return product(*(range(o + 1) for o in self._orders))

    def __getitem__(self, exp: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(exp), Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "MultiSeries") -> Tuple[int, ...]:
        if self._vars != other._vars:
            raise ValueError(f"variables differ: {self._vars} vs {other._vars}")
        return tuple(min(a, b) for a, b in zip(self._orders, other._orders))

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        orders = self._check(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return MultiSeries(self._vars, orders, out)

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(self._vars, self._orders, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiSeries(self._vars, self._orders, {e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, MultiSeries):
            return NotImplemented
        orders = self._check(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(k <= o for k, o in zip(e, orders)):
                    out[e] = out.get(e, 0) + c1 * c2
        return MultiSeries(self._vars, orders, out)

    __rmul__ = __mul__

    def inverse(self) -> "MultiSeries":
        """Inverse of a series with constant term 1, solved in graded order."""
        zero = (0,) * len(self._vars)
        if self[zero] != 1:
            raise ValueError("inverse needs constant term 1")
        inv: Dict[Tuple[int, ...], Fraction] = {zero: Fraction(1)}
        others = [(e, c) for e, c in self._coeffs.items() if e != zero]
        for exp in sorted(self.exponents(), key=lambda e: (sum(e), e)):
            if exp == zero:
                continue
            acc = Fraction(0)
            for e, c in others:
                rest = tuple(a - b for a, b in zip(exp, e))
                if min(rest) >= 0:
                    acc += c * inv.get(rest, 0)
            if acc:
                inv[exp] = -acc
        return MultiSeries(self._vars, self._orders, inv)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self._vars, self._orders, self._coeffs) == (other._vars, other._orders, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._vars, self._orders, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"MultiSeries({self._vars}, orders={self._orders}, {len(self._coeffs)} terms)"

    def to_csv(self, dense: bool = True) -> str:
        """Header row with the variable names then ``value``; one row per
        exponent vector (every vector in the box when ``dense``)."""
        rows = [",".join(self._vars + ("value",))]
        exps = self.exponents() if dense else (e for e, _ in self.items())
        for e in exps:
            rows.append(",".join(str(k) for k in e) + f",{self[e]}")
        return "\n".join(rows) + "\n"

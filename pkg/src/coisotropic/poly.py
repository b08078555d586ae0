"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from typing import Mapping, Sequence

from .exact import QQ, Matrix


class Polynomial:
    """Polynomial in ``nvars`` variables stored as ``{exponents: coefficient}``."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None, field=QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError("exponent tuple has wrong length")
            c = field(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def var(cls, i: int, nvars: int, field=QQ) -> "Polynomial":
        exps = tuple(1 if k == i else 0 for k in range(nvars))
        return cls(nvars, {exps: 1}, field)

    @classmethod
    def const(cls, c, nvars: int, field=QQ) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def variables(cls, nvars: int, field=QQ) -> list["Polynomial"]:
        return [cls.var(i, nvars, field) for i in range(nvars)]

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Polynomial.const(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, self.field.zero) + c
        return Polynomial(self.nvars, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, self.field.zero) + c1 * c2
        return Polynomial(self.nvars, terms, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.const(1, self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __call__(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point has wrong number of coordinates")
        point = [self.field(x) for x in point]
        total = self.field.zero
        for exps, c in self.terms.items():
            term = c
            for x, k in zip(point, exps):
                if k:
                    term = term * x ** k
            total += term
        return total

    def diff(self, i: int) -> "Polynomial":
        terms = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k:
                e = list(exps)
                e[i] -= 1
                terms[tuple(e)] = c * k
        return Polynomial(self.nvars, terms, self.field)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(exps) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def jacobian(polys: Sequence[Polynomial], point: Sequence, nvars: int, field=QQ) -> Matrix:
    """Jacobian matrix of ``polys`` at ``point`` (one row per polynomial)."""
    if not polys:
        return Matrix.zeros(0, nvars, field)
    return Matrix([[p.diff(i)(point) for i in range(nvars)] for p in polys], field)

"""Graded sl2 representations: models, decomposition, defect and duality.

A graded sl2 module is a representation on ``V = V0 + V1`` in which ``h``
preserves the parity and ``e``, ``f`` swap it. The irreducible graded
modules are labelled ``(lam, w)``: highest weight ``lam`` and highest
weight vector of parity ``p`` with ``w = (-1)**p``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import Matrix, Subspace, kernel

__all__ = [
    "GradedSl2Module", "GradedDecomposition", "InvalidModuleError",
    "build_irreducible", "direct_sum", "dual_module", "decompose",
    "defect_definitional", "defect_closed_form", "summand_defect", "dual", "delta",
    "verify_delta_identity", "odd_dimension", "random_decomposition", "scramble",
]


class InvalidModuleError(ValueError):
    """Matrices or parity splitting violate the graded sl2 axioms."""


@dataclass(frozen=True)
class GradedSl2Module:
    E: Matrix
    H: Matrix
    F: Matrix
    even: Subspace
    odd: Subspace

    @property
    def dim(self) -> int:
        return self.E.rows

    def validate(self) -> "GradedSl2Module":
        d = self.dim
        for name, m in (("E", self.E), ("H", self.H), ("F", self.F)):
            if m.shape != (d, d):
                raise InvalidModuleError(f"{name} has shape {m.shape}, expected {(d, d)}")
        E, H, F = self.E, self.H, self.F
        if H.bracket(E) != E.scale(2):
            raise InvalidModuleError("[H, E] != 2E")
        if H.bracket(F) != F.scale(-2):
            raise InvalidModuleError("[H, F] != -2F")
        if E.bracket(F) != H:
            raise InvalidModuleError("[E, F] != H")
        if self.even.dim + self.odd.dim != d or (self.even + self.odd).dim != d:
            raise InvalidModuleError("even and odd parts are not complementary")
        for name, m, src, dst in (("E", E, self.even, self.odd), ("E", E, self.odd, self.even),
                                  ("F", F, self.even, self.odd), ("F", F, self.odd, self.even),
                                  ("H", H, self.even, self.even), ("H", H, self.odd, self.odd)):
            if not src.image(m) <= dst:
                raise InvalidModuleError(f"{name} does not respect the grading")
        return self


class GradedDecomposition:
    """Multiset of graded irreducibles ``(lam, w)``."""

    __slots__ = ("_counts",)

    def __init__(self, summands: Iterable[tuple[int, int]] | dict = ()):
        counts = Counter()
        items = summands.items() if isinstance(summands, dict) else ((s, 1) for s in summands)
        for (lam, w), mult in items:
            if lam < 0 or w not in (1, -1):
                raise ValueError(f"bad summand {(lam, w)}")
            if mult:
                counts[(int(lam), int(w))] += mult
        self._counts = counts

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._counts.items())

    def summands(self) -> list[tuple[int, int]]:
        return [s for s, k in self.items() for _ in range(k)]

    @property
    def dim(self) -> int:
        return sum(k * (lam + 1) for (lam, _), k in self._counts.items())

    def __add__(self, other: "GradedDecomposition") -> "GradedDecomposition":
        return GradedDecomposition(dict(self._counts + other._counts))

    def __eq__(self, other):
        if not isinstance(other, GradedDecomposition):
            return NotImplemented
        return +self._counts == +other._counts

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        body = ", ".join(f"({lam},{w:+d})" + (f"x{k}" if k > 1 else "") for (lam, w), k in self.items())
        return "{" + body + "}"


def build_irreducible(lam: int, w: int) -> GradedSl2Module:
    """Weight-basis model ``v_0..v_lam`` with ``h v_k = (lam - 2k) v_k``.

    ``f v_k = (k+1) v_{k+1}``, ``e v_k = (lam - k + 1) v_{k-1}``; ``v_k`` has
    parity ``p + k`` where ``w = (-1)**p``.
    """
    if lam < 0 or w not in (1, -1):
        raise ValueError("need lam >= 0 and w = +1 or -1")
    d = lam + 1
    E = [[0] * d for _ in range(d)]
    F = [[0] * d for _ in range(d)]
    for k in range(d):
        if k >= 1:
            E[k - 1][k] = lam - k + 1
        if k + 1 < d:
            F[k + 1][k] = k + 1
    H = Matrix.diag([lam - 2 * k for k in range(d)])
    p0 = 0 if w == 1 else 1
    even = [k for k in range(d) if (p0 + k) % 2 == 0]
    odd = [k for k in range(d) if (p0 + k) % 2 == 1]
    return GradedSl2Module(Matrix(E), H, Matrix(F),
                           Subspace.coordinate(d, even), Subspace.coordinate(d, odd))


def _embed(sub: Subspace, offset: int, total: int) -> list[tuple]:
    z = sub.field.zero
    return [(z,) * offset + v + (z,) * (total - offset - sub.ambient_dim) for v in sub.vectors]


def direct_sum(*modules: GradedSl2Module) -> GradedSl2Module:
    if not modules:
        z = Matrix.zeros(0)
        return GradedSl2Module(z, z, z, Subspace.zero(0), Subspace.zero(0))
    total = sum(m.dim for m in modules)
    even, odd, off = [], [], 0
    for m in modules:
        even += _embed(m.even, off, total)
        odd += _embed(m.odd, off, total)
        off += m.dim
    return GradedSl2Module(Matrix.block_diag(*(m.E for m in modules)),
                           Matrix.block_diag(*(m.H for m in modules)),
                           Matrix.block_diag(*(m.F for m in modules)),
                           Subspace(total, even), Subspace(total, odd))


def dual_module(m: GradedSl2Module) -> GradedSl2Module:
    """Contragredient module: ``X -> -X^T`` on the dual basis.

    The even part of the dual is the annihilator of ``V1`` and the odd part
    the annihilator of ``V0``.
    """
    d = m.dim
    even = Subspace(d, m.odd.annihilator_equations().to_lists())
    odd = Subspace(d, m.even.annihilator_equations().to_lists())
    return GradedSl2Module(-m.E.T, -m.H.T, -m.F.T, even, odd)


def _restricted_trace(op: Matrix, sub: Subspace):
    """Trace of ``op`` on an invariant subspace, via canonical coordinates."""
    total = sub.field.zero
    for r, v in enumerate(sub.vectors):
        total += op.apply(v)[sub.pivots[r]]
    return total


def _highest_weight_space(m: GradedSl2Module, part: Subspace) -> Subspace:
    """``ker E`` intersected with one parity part."""
    if not part.dim:
        return part
    b = part.basis
    k = kernel(m.E @ b)
    return Subspace(m.dim, [b.apply(c) for c in k.vectors])


def decompose(m: GradedSl2Module) -> GradedDecomposition:
    """Read off ``(lam, w)`` multiplicities from ``ker E`` split by parity and weight."""
    d = m.dim
    counts: Counter = Counter()
    for w, part in ((1, m.even), (-1, m.odd)):
        hw = _highest_weight_space(m, part)
        if not hw.dim:
            continue
        if not hw.image(m.H) <= hw:
            raise InvalidModuleError("H does not preserve ker E")
        # H restricted to hw, in canonical coordinates
        k = hw.dim
        images = [m.H.apply(v) for v in hw.vectors]
        t = Matrix([[images[j][hw.pivots[r]] for j in range(k)] for r in range(k)])
        found = 0
        for lam in range(d):
            mult = k - (t - Matrix.identity(k).scale(lam)).rank()
            if mult:
                counts[(lam, w)] += mult
                found += mult
        if found != hw.dim:
            raise InvalidModuleError("H is not diagonalizable with nonnegative integer eigenvalues on ker E")
    dec = GradedDecomposition(dict(counts))
    if dec.dim != d:
        raise InvalidModuleError(f"highest weights account for dimension {dec.dim}, module has {d}")
    return dec


def defect_definitional(m: GradedSl2Module) -> int:
    """``Tr(H on (ker E)_0) - dim V1``."""
    hw_even = _highest_weight_space(m, m.even)
    tr = _restricted_trace(m.H, hw_even)
    value = Fraction(tr) - m.odd.dim
    if value.denominator != 1:
        raise InvalidModuleError(f"non-integral defect {value}")
    return int(value)


def summand_defect(lam: int, w: int) -> Fraction:
    """Closed form ``(lam*w + w*(1 + (-1)**lam)/2 - 1) / 2`` as an exact rational."""
    return Fraction(lam * w * 2 + w * (1 + (-1) ** lam) - 2, 4)


def defect_closed_form(dec: GradedDecomposition) -> int:
    total = sum((k * summand_defect(lam, w) for (lam, w), k in dec.items()), Fraction(0))
    if total.denominator != 1:
        raise ValueError(f"non-integral total defect {total}")
    return int(total)


def dual(dec: GradedDecomposition) -> GradedDecomposition:
    """``(lam, w) -> (lam, w * (-1)**lam)``."""
    return GradedDecomposition({(lam, w * (-1) ** lam): k for (lam, w), k in dec.items()})


def odd_dimension(dec: GradedDecomposition) -> int:
    """``dim V1``: a hwv of parity ``p`` gives odd vectors at string positions ``k`` with ``p + k`` odd."""
    total = 0
    for (lam, w), k in dec.items():
        total += k * ((lam + 1) // 2 if w == 1 else (lam + 2) // 2)
    return total


def delta(dec: GradedDecomposition) -> int:
    """Sum of ``lam + 2`` over summands with ``w (-1)^lam = -1``, minus ``dim V1``."""
    s = sum(k * (lam + 2) for (lam, w), k in dec.items() if w * (-1) ** lam == -1)
    return s - odd_dimension(dec)


def verify_delta_identity(dec: GradedDecomposition) -> bool:
    dd = dual(dec)
    return delta(dec) + delta(dd) + defect_closed_form(dec) + defect_closed_form(dd) == 0


def random_decomposition(rng: random.Random, max_lambda: int = 8, max_summands: int = 6,
                         max_dim: int | None = None) -> GradedDecomposition:
    out = []
    dim = 0
    for _ in range(rng.randint(1, max_summands)):
        lam = rng.randint(0, max_lambda)
        if max_dim is not None and dim + lam + 1 > max_dim:
            continue
        out.append((lam, rng.choice((1, -1))))
        dim += lam + 1
    if not out:
        out.append((0, rng.choice((1, -1))))
    return GradedDecomposition(out)


def scramble(m: GradedSl2Module, rng: random.Random, steps: int | None = None) -> GradedSl2Module:
    """Conjugate by a product of random elementary transvections.

    Parity subspaces stop being coordinate subspaces, which exercises the
    general decomposition path.
    """
    d = m.dim
    if d < 2:
        return m
    mats = [[list(r) for r in x.raw()[0]] for x in (m.E, m.H, m.F)]
    dens = [x.raw()[1] for x in (m.E, m.H, m.F)]
    g = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(steps if steps is not None else 2 * d):
        a, b = rng.sample(range(d), 2)
        c = rng.choice((-1, 1))
        # X -> T X T^{-1} with T = I + c E_ab
        for x in mats:
            x[a] = [u + c * v for u, v in zip(x[a], x[b])]
            for row in x:
                row[b] -= c * row[a]
        g[a] = [u + c * v for u, v in zip(g[a], g[b])]
    gm = Matrix(g)
    E, H, F = (Matrix(x).scale(Fraction(1, den)) for x, den in zip(mats, dens))
    return GradedSl2Module(E, H, F,
                           m.even.image(gm), m.odd.image(gm))

"""Symplectic vector spaces with a fixed Lagrangian, and (weak) coisotropy tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .exact import QQ, Matrix, Subspace, kernel
from .poly import Polynomial, jacobian

__all__ = [
    "SymplecticSpace", "PolyVarietySample", "SingularPointError",
    "symplectic_complement", "is_coisotropic_linear", "is_weakly_coisotropic_linear",
    "weakly_coisotropic_via_lagrangian", "tangent_space", "is_weakly_coisotropic_at",
    "filter_weakly_coisotropic_pieces", "random_subspace",
]


class SingularPointError(ValueError):
    """The Jacobian at a sample point has rank below the expected codimension."""


class SymplecticSpace:
    """Space ``F^{2m}`` with Gram matrix ``omega`` and a Lagrangian subspace."""

    def __init__(self, omega: Matrix, lagrangian: Subspace):
        n = omega.rows
        if not omega.is_square() or n % 2:
            raise ValueError("symplectic Gram matrix must be square of even size")
        if omega.T != -omega:
            raise ValueError("omega is not antisymmetric")
        if not omega.det():
            raise ValueError("omega is degenerate")
        if lagrangian.ambient_dim != n or lagrangian.dim != n // 2:
            raise ValueError("lagrangian must have half the ambient dimension")
        lb = lagrangian.basis
        if not (lb.T @ omega @ lb).is_zero():
            raise ValueError("omega does not vanish on the lagrangian")
        self.omega = omega
        self.lagrangian = lagrangian
        self.field = omega.field
        self.dim = n
        self.m = n // 2
        # rows are coordinates on V/L
        self.quotient = lagrangian.annihilator_equations()

    @classmethod
    def standard(cls, m: int, field=QQ) -> "SymplecticSpace":
        """``omega(e_i, e_{m+i}) = 1`` with Lagrangian ``span(e_{m+1}, ..., e_{2m})``."""
        n = 2 * m
        rows = [[0] * n for _ in range(n)]
        for i in range(m):
            rows[i][m + i] = 1
            rows[m + i][i] = -1
        return cls(Matrix(rows, field), Subspace.coordinate(n, range(m, n), field))

    def form(self, u: Sequence, v: Sequence):
        return sum((x * y for x, y in zip(u, self.omega.apply(v))), self.field.zero)

    def project(self, z: Subspace) -> Subspace:
        """Image of ``z`` in ``V/L``."""
        return z.image(self.quotient)

    def _check(self, z: Subspace):
        if z.ambient_dim != self.dim:
            raise ValueError(f"subspace lives in dimension {z.ambient_dim}, space has {self.dim}")


def symplectic_complement(space: SymplecticSpace, z: Subspace) -> Subspace:
    """``{v : omega(v, z) = 0 for all z in Z}``."""
    space._check(z)
    if not z.dim:
        return Subspace.full(space.dim, space.field)
    return kernel(z.basis.T @ space.omega)


def is_coisotropic_linear(space: SymplecticSpace, z: Subspace) -> bool:
    return symplectic_complement(space, z) <= z


def is_weakly_coisotropic_linear(space: SymplecticSpace, z: Subspace) -> bool:
    """``p(Z^perp)`` contained in ``p(Z)``, with ``p`` the quotient by the Lagrangian."""
    return space.project(symplectic_complement(space, z)) <= space.project(z)


def weakly_coisotropic_via_lagrangian(space: SymplecticSpace, z: Subspace) -> bool:
    """The dual form of the test: ``p(Z)^perp`` inside ``Z cap L``.

    Here ``p(Z)^perp`` is taken in ``L`` under ``L = (V/L)^*``,
    ``l -> (p(v) -> omega(l, v))``, i.e. the vectors of ``L`` that pair
    to zero with the full preimage ``p^{-1}(p(Z))``.
    """
    space._check(z)
    preimage = space.project(z).preimage(space.quotient)
    lb = space.lagrangian.basis
    # l = lb c ; omega(lb c, w) = 0 for every w in the preimage
    if preimage.dim:
        coeffs = kernel((lb.T @ space.omega @ preimage.basis).T)
        perp = Subspace(space.dim, [lb.apply(c) for c in coeffs.vectors], space.field)
    else:
        perp = space.lagrangian
    return perp <= (z & space.lagrangian)


@dataclass(frozen=True)
class PolyVarietySample:
    """Polynomials cutting out ``Z`` together with exact points on ``Z``."""

    polynomials: tuple[Polynomial, ...]
    nvars: int
    expected_codim: int
    points: tuple[tuple, ...] = field(default=())
    field: object = QQ

    def __post_init__(self):
        object.__setattr__(self, "polynomials", tuple(self.polynomials))
        object.__setattr__(self, "points", tuple(tuple(self.field(x) for x in p) for p in self.points))
        for pt in self.points:
            if not self.contains(pt):
                raise ValueError(f"sample point {pt} is not on the variety")

    def contains(self, point: Sequence) -> bool:
        return all(not f(point) for f in self.polynomials)


def tangent_space(sample: PolyVarietySample, point: Sequence) -> Subspace:
    """Kernel of the Jacobian at a smooth point of the sampled variety."""
    point = tuple(sample.field(x) for x in point)
    if not sample.contains(point):
        raise ValueError(f"{point} is not on the variety")
    jac = jacobian(sample.polynomials, point, sample.nvars, sample.field)
    rank = jac.rank()
    if rank < sample.expected_codim:
        raise SingularPointError(
            f"Jacobian rank {rank} < expected codimension {sample.expected_codim} at {point}")
    if rank > sample.expected_codim:
        raise ValueError(f"Jacobian rank {rank} exceeds expected codimension {sample.expected_codim}")
    if jac.rows == 0:
        return Subspace.full(sample.nvars, sample.field)
    return kernel(jac)


def is_weakly_coisotropic_at(space: SymplecticSpace, sample: PolyVarietySample, point: Sequence) -> bool:
    return is_weakly_coisotropic_linear(space, tangent_space(sample, point))


def filter_weakly_coisotropic_pieces(space: SymplecticSpace, pieces: Sequence[Subspace]) -> list[Subspace]:
    """Keep the linear pieces that are weakly coisotropic, in order."""
    return [z for z in pieces if is_weakly_coisotropic_linear(space, z)]


def _random_vector(rng: random.Random, n: int, lo: int = -2, hi: int = 2, density: float = 1.0):
    return [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)]


def _random_isotropic(space: SymplecticSpace, k: int, rng: random.Random) -> Subspace:
    iso = Subspace.zero(space.dim, space.field)
    for _ in range(4 * k + 4):
        if iso.dim >= k:
            break
        perp = symplectic_complement(space, iso)
        c = _random_vector(rng, perp.dim)
        v = perp.combination(c)
        if any(v):
            iso = iso + Subspace(space.dim, [v], space.field)
    return iso


def random_subspace(space: SymplecticSpace, rng: random.Random) -> Subspace:
    """Seeded random subspace drawn from a mix of small-integer constructions.

    Plain random spans are almost never coisotropic, so the mix also
    includes complements of random isotropic subspaces, spans mixing the
    Lagrangian with a few vectors, and sparse coordinate-like spans.
    """
    n = space.dim
    kind = rng.randrange(5)
    if kind == 0:
        k = rng.randint(0, n)
        vecs = [_random_vector(rng, n) for _ in range(k)]
    elif kind == 1:
        k = rng.randint(0, n)
        vecs = [_random_vector(rng, n, -1, 1, density=0.3) for _ in range(k)]
    elif kind == 2:
        iso = _random_isotropic(space, rng.randint(0, space.m), rng)
        co = symplectic_complement(space, iso)
        vecs = list(co.vectors) + [_random_vector(rng, n) for _ in range(rng.randint(0, 1))]
    elif kind == 3:
        lag = space.lagrangian.vectors
        keep = [v for v in lag if rng.random() < 0.7]
        vecs = keep + [_random_vector(rng, n, -1, 1, density=0.5) for _ in range(rng.randint(0, space.m))]
    else:
        iso = _random_isotropic(space, rng.randint(1, space.m), rng)
        vecs = list(iso.vectors) + [_random_vector(rng, n, -1, 1, density=0.4)
                                    for _ in range(rng.randint(0, 2))]
    return Subspace(n, vecs, space.field)

"""Incidence geometry over a regular nilpotent: the sets S, S', the pair
variety over a fixed Jordan block ``A``, the kernel lattice ``L_ij`` and the
coordinate polynomial ``f``.

Points of ``V x V* x V x V*`` are flat tuples ``(v1, phi1, v2, phi2)`` of
length ``4n``. Covectors are written in the dual basis, so ``phi(v)`` is the
dot product and ``A*`` acts by the transpose.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .exact import QQ, Matrix, PrimeField, Subspace, kernel, solve_affine
from .symplectic import SymplecticSpace, filter_weakly_coisotropic_pieces

__all__ = [
    "KeyLemmaInstance", "TripleXPoint", "UndecidedError", "InconclusiveError", "InconsistentError",
    "in_S", "in_Sprime", "in_Scheck", "in_Scheck_prime", "in_Scheck_double_prime", "invariants_vanish",
    "in_RA", "lattice_Lij", "f_value", "ra_mask", "enumerate_RA_Lii", "verify_f_vanishes",
    "estimate_dimension", "verify_upper_triangular_claim", "verify_upper_triangular_symbolic",
    "keylemma_symplectic_space", "lij_survivors", "verify_Lii_filter", "brute_force_RA_Lii_count",
    "LiiEnumeration",
]


class UndecidedError(RuntimeError):
    """Rational search found no witness and no exact refutation applied."""


class InconclusiveError(ValueError):
    """Point-count dimension estimates disagree between primes."""


class InconsistentError(ValueError):
    """``[A, B] = M`` has no solution."""


def _dot(u, v, zero):
    return sum((a * b for a, b in zip(u, v)), zero)


@dataclass(frozen=True)
class TripleXPoint:
    A: Matrix
    v: tuple
    phi: tuple

    def __post_init__(self):
        n = self.A.rows
        if not self.A.is_square():
            raise ValueError("A must be square")
        f = self.A.field
        object.__setattr__(self, "v", tuple(f(x) for x in self.v))
        object.__setattr__(self, "phi", tuple(f(x) for x in self.phi))
        if len(self.v) != n or len(self.phi) != n:
            raise ValueError("v and phi must have length n")
        if self.A.trace():
            raise ValueError("A must be traceless")

    @property
    def n(self) -> int:
        return self.A.rows

    @classmethod
    def zero(cls, n: int, field=QQ) -> "TripleXPoint":
        return cls(Matrix.zeros(n, n, field), (0,) * n, (0,) * n)


def _krylov(a: Matrix, v: tuple, k: int) -> list[tuple]:
    out = [v]
    for _ in range(k):
        out.append(a.apply(out[-1]))
    return out


def in_S(pt: TripleXPoint) -> bool:
    """``A^n = 0`` and ``phi(A^i v) = 0`` for ``0 <= i <= n``."""
    n, z = pt.n, pt.A.field.zero
    if not (pt.A ** n).is_zero():
        return False
    return all(not _dot(pt.phi, w, z) for w in _krylov(pt.A, pt.v, n))


def in_Sprime(pt: TripleXPoint) -> bool:
    """``S`` plus ``A^{n-1} v = 0`` and ``(A*)^{n-1} phi = 0``."""
    if not in_S(pt):
        return False
    p = pt.A ** (pt.n - 1)
    return not any(p.apply(pt.v)) and not any(p.T.apply(pt.phi))


def invariants_vanish(pt: TripleXPoint) -> bool:
    """``phi(A^i v) = 0`` for ``i < n`` and ``tr A^k = 0`` for ``2 <= k <= n``."""
    n, z = pt.n, pt.A.field.zero
    if any(_dot(pt.phi, w, z) for w in _krylov(pt.A, pt.v, n - 1)):
        return False
    power = pt.A
    for _ in range(2, n + 1):
        power = power @ pt.A
        if power.trace():
            return False
    return True


def _outer(v, phi, field) -> Matrix:
    return Matrix([[a * b for b in phi] for a in v], field)


def _pair_equation_holds(p1: TripleXPoint, p2: TripleXPoint) -> bool:
    f = p1.A.field
    lhs = p1.A.bracket(p2.A) + _outer(p1.v, p2.phi, f) - _outer(p2.v, p1.phi, f)
    return lhs.is_zero()


def _cross(p1: TripleXPoint, p2: TripleXPoint, test) -> bool:
    return all(test(TripleXPoint(a.A, b.v, b.phi)) for a in (p1, p2) for b in (p1, p2))


def in_Scheck(p1: TripleXPoint, p2: TripleXPoint) -> bool:
    """All ``(A_i, v_j, phi_j)`` in ``S`` and ``[A1, A2] + v1 (x) phi2 - v2 (x) phi1 = 0``."""
    return _cross(p1, p2, in_S) and _pair_equation_holds(p1, p2)


def in_Scheck_prime(p1: TripleXPoint, p2: TripleXPoint) -> bool:
    return _cross(p1, p2, in_Sprime) and _pair_equation_holds(p1, p2)


def in_Scheck_double_prime(p1: TripleXPoint, p2: TripleXPoint) -> bool:
    return in_Scheck_prime(p1, p2) and (p1.A ** (p1.n - 1)).is_zero()


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class KeyLemmaInstance:
    """Single full Jordan block ``A`` (``A e_1 = 0``, ``A e_k = e_{k-1}``) over ``field``."""

    n: int
    field: object = QQ

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @cached_property
    def A(self) -> Matrix:
        n = self.n
        return Matrix([[1 if c == r + 1 else 0 for c in range(n)] for r in range(n)], self.field)

    @property
    def prime(self) -> int | None:
        return self.field.p if isinstance(self.field, PrimeField) else None

    @cached_property
    def _system(self) -> Matrix:
        """Rows: entries of ``[A, X]`` then ``tr X``, as linear forms in ``vec(X)``."""
        n = self.n
        rows = []
        for r in range(n):
            for c in range(n):
                row = [0] * (n * n)
                # ([A, X])_{rc} = X_{r+1, c} - X_{r, c-1}
                if r + 1 < n:
                    row[(r + 1) * n + c] += 1
                if c >= 1:
                    row[r * n + c - 1] -= 1
                rows.append(row)
        rows.append([1 if r == c else 0 for r in range(n) for c in range(n)])
        return Matrix(rows, self.field)

    def split(self, point: Sequence) -> tuple[tuple, tuple, tuple, tuple]:
        n = self.n
        if len(point) != 4 * n:
            raise ValueError(f"points have {4 * n} coordinates")
        pt = tuple(self.field(x) for x in point)
        return pt[:n], pt[n:2 * n], pt[2 * n:3 * n], pt[3 * n:]

    def commutator_rhs(self, v1, phi1, v2, phi2) -> Matrix:
        """``M`` with ``[A, A2] = M``: ``v2 (x) phi1 - v1 (x) phi2``."""
        return _outer(v2, phi1, self.field) - _outer(v1, phi2, self.field)

    def solutions(self, v1, phi1, v2, phi2):
        """Affine set of traceless ``A2`` with ``[A, A2] = v2 (x) phi1 - v1 (x) phi2``."""
        m = self.commutator_rhs(v1, phi1, v2, phi2)
        return solve_affine(self._system, m.flat() + (self.field.zero,))


def _a2_ok(a2: Matrix, v1, phi1, v2, phi2) -> bool:
    return in_Sprime(TripleXPoint(a2, v1, phi1)) and in_Sprime(TripleXPoint(a2, v2, phi2))


def in_RA(inst: KeyLemmaInstance, v1, phi1, v2, phi2, *, grid: int = 2) -> bool:
    """Is there ``A2`` making ``((A, v1, phi1), (A2, v2, phi2))`` a point of S-check-prime?

    Over ``F_p`` the affine solution set is enumerated exhaustively. Over QQ
    a small-integer grid supplies witnesses, and a refutation is available
    when every solution is upper triangular: then nilpotent means zero
    diagonal, a linear condition. Otherwise :class:`UndecidedError`.
    """
    v1, phi1, v2, phi2 = inst.split(tuple(v1) + tuple(phi1) + tuple(v2) + tuple(phi2))
    A, n, F = inst.A, inst.n, inst.field
    if not (in_Sprime(TripleXPoint(A, v1, phi1)) and in_Sprime(TripleXPoint(A, v2, phi2))):
        return False
    sol = inst.solutions(v1, phi1, v2, phi2)
    if sol is None:
        return False
    x0, ker = sol

    def candidate(c):
        flat = [a + b for a, b in zip(x0, ker.combination(c))] if ker.dim else list(x0)
        return Matrix.from_flat(n, n, flat, F)

    if inst.prime is not None:
        p = inst.prime
        return any(_a2_ok(candidate(c), v1, phi1, v2, phi2)
                   for c in itertools.product(range(p), repeat=ker.dim))
    lower = [r * n + c for r in range(n) for c in range(n) if r > c]
    diag = [r * n + r for r in range(n)]
    base, directions = tuple(F(0) for _ in range(ker.dim)), Subspace.full(ker.dim, F)
    if all(not x0[k] for k in lower) and all(not vec[k] for vec in ker.vectors for k in lower):
        # eigenvalues are diagonal entries; nilpotent solutions form an affine subspace
        kb = ker.basis
        rows = [kb.row(k) for k in diag]
        restricted = solve_affine(Matrix(rows, F, cols=ker.dim), tuple(-x0[k] for k in diag))
        if restricted is None:
            return False
        base, directions = restricted
    for c in itertools.product(range(-grid, grid + 1), repeat=directions.dim):
        coeffs = [a + b for a, b in zip(base, directions.combination(c))] if directions.dim else base
        if _a2_ok(candidate(coeffs), v1, phi1, v2, phi2):
            return True
    raise UndecidedError("no witness on the search grid and no exact refutation")


# --------------------------------------------------------------------------
# lattice, f and the symplectic structure


def _kernel_ranges(n: int, i: int) -> tuple[range, range]:
    """Coordinate supports of ``Ker A^i`` and ``Ker (A*)^{n-i}``."""
    return range(0, i), range(i, n)


def lattice_Lij(inst: KeyLemmaInstance, i: int, j: int) -> Subspace:
    n = inst.n
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError("need 0 <= i, j <= n")
    idx = []
    for off, k in ((0, i), (2 * n, j)):
        vs, ps = _kernel_ranges(n, k)
        idx += [off + r for r in vs] + [off + n + r for r in ps]
    return Subspace.coordinate(4 * n, idx, inst.field)


def f_value(inst: KeyLemmaInstance, i: int, point: Sequence):
    """``(v1)_i (phi2)_{i+1} - (v2)_i (phi1)_{i+1}`` (coordinates counted from 1)."""
    n = inst.n
    if not 1 <= i <= n - 1:
        raise ValueError("need 1 <= i <= n-1")
    v1, phi1, v2, phi2 = inst.split(point)
    if tuple(v1) + tuple(phi1) + tuple(v2) + tuple(phi2) not in lattice_Lij(inst, i, i):
        raise ValueError(f"point is not in L_{i}{i}")
    return v1[i - 1] * phi2[i] - v2[i - 1] * phi1[i]


def keylemma_symplectic_space(inst: KeyLemmaInstance) -> SymplecticSpace:
    """``(V x V*) x (V x V*)`` as a cotangent space of the first factor.

    ``omega((a1, b1), (a2, b2)) = <a1, b2> - <a2, b1>`` where
    ``<(v, phi), (v', phi')> = phi'(v) + phi(v')`` is the standard form on
    ``V x V*``. The second factor is the Lagrangian.
    """
    n, N = inst.n, 4 * inst.n
    rows = [[0] * N for _ in range(N)]
    for k in range(n):
        for a, b in ((k, 3 * n + k), (n + k, 2 * n + k)):
            rows[a][b] = 1
            rows[b][a] = -1
    return SymplecticSpace(Matrix(rows, inst.field), Subspace.coordinate(N, range(2 * n, N), inst.field))


def lij_survivors(inst: KeyLemmaInstance, lo: int = 1, hi: int | None = None) -> list[tuple[int, int]]:
    """Indices ``(i, j)`` in ``[lo, hi]^2`` whose ``L_ij`` is weakly coisotropic."""
    hi = inst.n - 1 if hi is None else hi
    space = keylemma_symplectic_space(inst)
    idx = [(i, j) for i in range(lo, hi + 1) for j in range(lo, hi + 1)]
    pieces = [lattice_Lij(inst, i, j) for i, j in idx]
    keep = filter_weakly_coisotropic_pieces(space, pieces)
    return [ij for ij, z in zip(idx, pieces) if any(z is k for k in keep)]


def verify_Lii_filter(inst: KeyLemmaInstance) -> bool:
    """Survivors among ``L_ij``, ``1 <= i, j <= n-1``, are exactly the diagonal ones."""
    return lij_survivors(inst) == [(i, i) for i in range(1, inst.n)]


# --------------------------------------------------------------------------
# the upper-triangular claim


def _block_shape_positions(n: int, i: int) -> list[tuple[int, int]]:
    return [(r, c) for r in range(i) for c in range(i, n)]


def verify_upper_triangular_claim(inst: KeyLemmaInstance, M: Matrix) -> bool:
    """Every ``B`` in ``gl_n`` with ``[A, B] = M`` is upper triangular.

    ``M`` must vanish outside some top-right ``i x (n-i)`` block.
    """
    n = inst.n
    if M.shape != (n, n):
        raise ValueError("M has the wrong shape")
    if not any(all(not M[r, c] for r in range(n) for c in range(n) if (r, c) not in set(_block_shape_positions(n, i)))
               for i in range(n + 1)):
        raise ValueError("M is not of the top-right block shape")
    system = Matrix(inst._system.to_lists()[:-1], inst.field, cols=n * n)
    sol = solve_affine(system, M.flat())
    if sol is None:
        raise InconsistentError("no B solves [A, B] = M")
    x0, ker = sol
    lower = [r * n + c for r in range(n) for c in range(n) if r > c]
    return all(not x0[k] for k in lower) and all(not v[k] for v in ker.vectors for k in lower)


def verify_upper_triangular_symbolic(n: int, i: int, field=QQ) -> bool:
    """The claim with the block entries of ``M`` as unknowns.

    Solves ``[A, B] - M(m) = 0`` jointly in ``(B, m)`` and checks that every
    lower-triangular entry of ``B`` vanishes on the whole solution space.
    """
    inst = KeyLemmaInstance(n, field)
    pos = _block_shape_positions(n, i)
    base = inst._system.to_lists()[:-1]
    rows = []
    for r in range(n):
        for c in range(n):
            extra = [-1 if (r, c) == q else 0 for q in pos]
            rows.append(list(base[r * n + c]) + extra)
    sol = kernel(Matrix(rows, field, cols=n * n + len(pos)))
    lower = [r * n + c for r in range(n) for c in range(n) if r > c]
    return all(not v[k] for v in sol.vectors for k in lower)


# --------------------------------------------------------------------------
# vectorised enumeration over F_p


_MAX_PRIME = 1 << 15


@dataclass
class _ModSolver:
    p: int
    n: int
    K: np.ndarray  # particular solution operator, n^2 x (n^2 + 1)
    C: np.ndarray  # consistency rows, c x (n^2 + 1)
    Z: np.ndarray  # traceless centraliser basis, k x n x n


def _mod_solver(inst: KeyLemmaInstance) -> _ModSolver:
    p, n = inst.prime, inst.n
    system = inst._system
    m, nn = system.rows, system.cols
    aug = Matrix([list(system.row(r)) + [1 if s == r else 0 for s in range(m)] for r in range(m)], inst.field)
    red, piv = aug.rref()
    K = np.zeros((nn, m), dtype=np.int64)
    cons = []
    for r, c in enumerate(piv):
        right = [int(x) for x in red.row(r)[nn:]]
        if c < nn:
            K[c] = right
        else:
            cons.append(right)
    sol = solve_affine(system, (inst.field.zero,) * m)
    Z = np.array([[int(x) for x in v] for v in sol[1].vectors], dtype=np.int64).reshape(-1, n, n)
    C = np.array(cons, dtype=np.int64).reshape(-1, m)
    return _ModSolver(p, n, K, C, Z)


def _sprime_mask(X: np.ndarray, v: np.ndarray, phi: np.ndarray, p: int) -> np.ndarray:
    """Vectorised ``in_Sprime`` for stacks ``X`` (P,n,n), ``v``, ``phi`` (P,n)."""
    n = v.shape[1]
    ok = np.ones(v.shape[0], dtype=bool)
    w = v.copy()
    for k in range(n + 1):
        ok &= (np.einsum("pi,pi->p", phi, w) % p) == 0
        if k == n - 1:
            ok &= ~w.any(axis=1)
        w = np.einsum("pij,pj->pi", X, w) % p
    # (X^T)^{n-1} phi = phi^T X^{n-1}
    u = phi.copy()
    for _ in range(n - 1):
        u = np.einsum("pi,pij->pj", u, X) % p
    ok &= ~u.any(axis=1)
    xp = X.copy()
    for _ in range(n - 1):
        xp = np.matmul(xp, X) % p
    ok &= ~xp.reshape(len(X), -1).any(axis=1)
    return ok


def ra_mask(inst: KeyLemmaInstance, points: np.ndarray, solver: _ModSolver | None = None) -> np.ndarray:
    """Membership in ``R_A`` for an integer array of points (rows of length ``4n``)."""
    p, n = inst.prime, inst.n
    if p is None:
        raise ValueError("vectorised enumeration needs a prime field")
    if p >= _MAX_PRIME:
        raise ValueError("prime too large for int64 enumeration")
    solver = solver or _mod_solver(inst)
    pts = np.asarray(points, dtype=np.int64) % p
    P = len(pts)
    v1, phi1, v2, phi2 = pts[:, :n], pts[:, n:2 * n], pts[:, 2 * n:3 * n], pts[:, 3 * n:]
    A = np.broadcast_to(np.array([[int(x) for x in r] for r in inst.A.to_lists()], dtype=np.int64), (P, n, n))
    ok = _sprime_mask(A, v1, phi1, p) & _sprime_mask(A, v2, phi2, p)
    rhs = (np.einsum("pi,pj->pij", v2, phi1) - np.einsum("pi,pj->pij", v1, phi2)).reshape(P, n * n) % p
    rhs = np.concatenate([rhs, np.zeros((P, 1), dtype=np.int64)], axis=1)
    if len(solver.C):
        ok &= ~((rhs @ solver.C.T) % p).any(axis=1)
    result = np.zeros(P, dtype=bool)
    live = np.nonzero(ok)[0]
    if not len(live):
        return result
    x0 = ((rhs[live] @ solver.K.T) % p).reshape(-1, n, n)
    found = np.zeros(len(live), dtype=bool)
    for c in itertools.product(range(p), repeat=len(solver.Z)):
        shift = np.tensordot(np.array(c, dtype=np.int64), solver.Z, axes=1) if len(solver.Z) else 0
        X = (x0 + shift) % p
        found |= (_sprime_mask(X, v1[live], phi1[live], p) & _sprime_mask(X, v2[live], phi2[live], p))
    result[live] = found
    return result


@dataclass
class LiiEnumeration:
    n: int
    p: int
    i: int
    points: int
    members: int
    violations: list[tuple[int, ...]] = field(default_factory=list)
    outside_lattice: int = 0

    @property
    def f_vanishes(self) -> bool:
        return not self.violations


def _lii_points(inst: KeyLemmaInstance, i: int) -> np.ndarray:
    n, p = inst.n, inst.prime
    idx = list(lattice_Lij(inst, i, i).pivots)
    grid = np.indices((p,) * len(idx), dtype=np.int64).reshape(len(idx), -1).T
    pts = np.zeros((len(grid), 4 * n), dtype=np.int64)
    pts[:, idx] = grid
    return pts


def enumerate_RA_Lii(inst: KeyLemmaInstance, i: int, chunk: int = 1 << 15) -> LiiEnumeration:
    """Exhaustive scan of ``L_ii(F_p)``: members of ``R_A`` and values of ``f`` on them."""
    n, p = inst.n, inst.prime
    if not 1 <= i <= n - 1:
        raise ValueError("need 1 <= i <= n-1")
    solver = _mod_solver(inst)
    pts = _lii_points(inst, i)
    members = 0
    violations: list[tuple[int, ...]] = []
    for start in range(0, len(pts), chunk):
        block = pts[start:start + chunk]
        mask = ra_mask(inst, block, solver)
        mem = block[mask]
        members += len(mem)
        f = (mem[:, i - 1] * mem[:, 3 * n + i] - mem[:, 2 * n + i - 1] * mem[:, n + i]) % p
        violations += [tuple(int(x) for x in row) for row in mem[f != 0]]
    return LiiEnumeration(n, p, i, len(pts), members, sorted(violations))


def verify_f_vanishes(inst: KeyLemmaInstance, i: int) -> bool:
    return enumerate_RA_Lii(inst, i).f_vanishes


def enumerate_RA_full(inst: KeyLemmaInstance, chunk: int = 1 << 15) -> np.ndarray:
    """All members of ``R_A`` in ``(V x V* x V x V*)(F_p)``; only for tiny ``p^{4n}``."""
    n, p = inst.n, inst.prime
    solver = _mod_solver(inst)
    total = p ** (4 * n)
    out = []
    for start in range(0, total, chunk):
        flat = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.stack([(flat // p ** k) % p for k in range(4 * n)], axis=1)
        out.append(digits[ra_mask(inst, digits, solver)])
    return np.concatenate(out) if out else np.zeros((0, 4 * n), dtype=np.int64)


def in_Q_lattice(n: int, point: Sequence[int]) -> bool:
    """Does the point lie in some ``L_ij`` with ``1 <= i, j <= n-1``?"""
    def fits(v, phi):
        return any(not any(v[i:]) and not any(phi[:i]) for i in range(1, n))
    pt = [int(x) for x in point]
    return fits(pt[:n], pt[n:2 * n]) and fits(pt[2 * n:3 * n], pt[3 * n:])


def estimate_dimension(point_counts: Mapping[int, int]) -> int:
    """Common value of ``round(log count / log p)`` over at least three primes."""
    if len(point_counts) < 3:
        raise ValueError("need counts for at least three primes")
    estimates = {}
    for p, count in sorted(point_counts.items()):
        if p < 2 or count < 1:
            raise ValueError(f"bad count {count} for p = {p}")
        estimates[p] = round(math.log(count) / math.log(p))
    if len(set(estimates.values())) > 1:
        raise InconclusiveError(f"prime estimates disagree: {estimates}")
    return next(iter(estimates.values()))


def brute_force_RA_Lii_count(n: int, p: int, i: int) -> int:
    """Plain-integer count of ``R_A cap L_ii`` by trying every ``A2`` in ``sl_n(F_p)``.

    Shares no code with the solver-based enumeration; meant for tiny cases.
    """
    def mul(x, y):
        return [[sum(x[r][k] * y[k][c] for k in range(n)) % p for c in range(n)] for r in range(n)]

    def mv(x, v):
        return [sum(x[r][k] * v[k] for k in range(n)) % p for r in range(n)]

    def power(x, k):
        out = [[int(r == c) for c in range(n)] for r in range(n)]
        for _ in range(k):
            out = mul(out, x)
        return out

    def sprime(x, v, phi):
        if any(any(r) for r in power(x, n)):
            return False
        w = v
        for _ in range(n + 1):
            if sum(a * b for a, b in zip(phi, w)) % p:
                return False
            w = mv(x, w)
        xt = [list(r) for r in zip(*power(x, n - 1))]
        return not any(mv(power(x, n - 1), v)) and not any(mv(xt, phi))

    A = [[int(c == r + 1) for c in range(n)] for r in range(n)]
    sl = []
    for entries in itertools.product(range(p), repeat=n * n):
        x = [list(entries[r * n:(r + 1) * n]) for r in range(n)]
        if sum(x[r][r] for r in range(n)) % p == 0 and not any(any(r) for r in power(x, n)):
            sl.append(x)
    count = 0
    free = [(0, r) for r in range(i)] + [(1, r) for r in range(i, n)] + \
           [(2, r) for r in range(i)] + [(3, r) for r in range(i, n)]
    for vals in itertools.product(range(p), repeat=len(free)):
        vecs = [[0] * n for _ in range(4)]
        for (slot, r), val in zip(free, vals):
            vecs[slot][r] = val
        v1, phi1, v2, phi2 = vecs
        if not (sprime(A, v1, phi1) and sprime(A, v2, phi2)):
            continue
        target = [[(v2[r] * phi1[c] - v1[r] * phi2[c]) % p for c in range(n)] for r in range(n)]
        for x in sl:
            ax, xa = mul(A, x), mul(x, A)
            if any((ax[r][c] - xa[r][c] - target[r][c]) % p for r in range(n) for c in range(n)):
                continue
            if sprime(x, v1, phi1) and sprime(x, v2, phi2):
                count += 1
                break
    return count


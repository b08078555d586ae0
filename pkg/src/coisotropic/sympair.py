"""Symmetric pairs ``(g, h, theta)`` realised as matrix Lie algebras.

A pair is stored as a basis of ``g`` inside ``gl_n`` plus the matrix of the
involution ``theta`` in that basis (column ``j`` holds the coordinates of
``theta(b_j)``). ``h`` and ``g^sigma`` are the ``+1`` and ``-1``
eigenspaces, expressed as subspaces of coordinate space ``F^dim g``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from .exact import QQ, Matrix, Subspace, is_nilpotent, kernel, solve_affine, subspace_all_nilpotent
from .sl2 import GradedDecomposition, GradedSl2Module, decompose, defect_closed_form, defect_definitional

__all__ = [
    "SymmetricPairAlgebra", "PairInvariantError", "NoGradedTripleError", "NilpotentGSigma",
    "GradedTriple", "FAMILIES", "catalog", "load_pair", "load_pair_json", "centralizer_in_gsigma",
    "is_distinguished", "graded_sl2_triple", "adjoint_graded_module", "defect_of_nilpotent",
    "sakellaridis_margin", "check_negative_distinguished_defect", "nilpotent_representatives",
    "partitions", "jordan_nilpotent", "adjoint_decomposition", "pair_to_json",
]


class PairInvariantError(ValueError):
    """A symmetric pair failed one of its structural invariants."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"invariant '{invariant}' violated" + (f": {detail}" if detail else ""))


class NoGradedTripleError(ValueError):
    """The linear systems defining a graded sl2-triple through ``x`` are inconsistent."""


def _flat(m: Matrix) -> tuple:
    return m.flat()


@dataclass(frozen=True, eq=False)
class SymmetricPairAlgebra:
    n: int
    g_basis: tuple[Matrix, ...]
    theta: Matrix
    name: str = "custom"
    family: str | None = None
    size: int | None = None

    @property
    def dim(self) -> int:
        return len(self.g_basis)

    @property
    def field(self):
        return self.theta.field

    # -- coordinates ------------------------------------------------------
    @cached_property
    def _basis_columns(self) -> Matrix:
        return Matrix.from_columns([_flat(b) for b in self.g_basis], self.n * self.n, self.field)

    @cached_property
    def _coordinate_map(self) -> tuple[tuple[int, ...], Matrix]:
        g = self._basis_columns
        _, rows = g.T.rref()
        if len(rows) != self.dim:
            raise PairInvariantError("basis independence", f"rank {len(rows)} < {self.dim}")
        sub = Matrix([g.row(r) for r in rows], self.field)
        return rows, sub.inverse()

    def coords_many(self, mats: Sequence[Matrix]) -> Matrix:
        """Coordinates of several matrices as the columns of a ``dim x len`` matrix."""
        rows, inv = self._coordinate_map
        k = Matrix([[m[divmod(r, self.n)] for m in mats] for r in rows], self.field, cols=len(mats))
        c = inv @ k
        full = Matrix.from_columns([_flat(m) for m in mats], self.n * self.n, self.field)
        if self._basis_columns @ c != full:
            raise ValueError("matrix is not in g")
        return c

    def coords(self, m: Matrix) -> tuple:
        return self.coords_many([m]).col(0)

    def element(self, c: Sequence) -> Matrix:
        flat = self._basis_columns.apply(c)
        return Matrix.from_flat(self.n, self.n, flat, self.field)

    def ad(self, x: Matrix) -> Matrix:
        """Matrix of ``ad x`` on ``g`` in the stored basis."""
        return self.coords_many([x.bracket(b) for b in self.g_basis])

    # -- structure ----------------------------------------------------------
    @cached_property
    def h(self) -> Subspace:
        return kernel(self.theta - Matrix.identity(self.dim, self.field))

    @cached_property
    def gsigma(self) -> Subspace:
        return kernel(self.theta + Matrix.identity(self.dim, self.field))

    @cached_property
    def trace_form(self) -> Matrix:
        b = self.g_basis
        return Matrix([[(x @ y).trace() for y in b] for x in b], self.field)

    @cached_property
    def derived(self) -> Subspace:
        """Coordinates of ``[g, g]``; equals ``g`` for semisimple ``g``."""
        vecs = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vecs.append(self.g_basis[i].bracket(self.g_basis[j]))
        if not vecs:
            return Subspace.zero(self.dim, self.field)
        return Subspace(self.dim, self.coords_many(vecs).columns(), self.field)

    def matrices(self, sub: Subspace) -> list[Matrix]:
        return [self.element(v) for v in sub.vectors]

    def in_gsigma(self, x: Matrix) -> bool:
        try:
            return self.coords(x) in self.gsigma
        except ValueError:
            return False

    def validate(self) -> "SymmetricPairAlgebra":
        """Check every structural invariant; raises :class:`PairInvariantError`."""
        d, n = self.dim, self.n
        if d == 0:
            raise PairInvariantError("nonzero algebra", "empty basis")
        if any(b.shape != (n, n) for b in self.g_basis):
            raise PairInvariantError("basis shape", f"every basis element must be {n}x{n}")
        if self.theta.shape != (d, d):
            raise PairInvariantError("theta shape", f"theta must be {d}x{d}")
        self._coordinate_map  # independence
        ident = Matrix.identity(d, self.field)
        try:
            ads = [self.ad(b) for b in self.g_basis]
        except ValueError:
            raise PairInvariantError("bracket closure", "[g, g] is not contained in g") from None
        if self.theta @ self.theta != ident:
            raise PairInvariantError("theta involution", "theta^2 != identity")
        images = [self.element(self.theta.col(j)) for j in range(d)]
        for i in range(d):
            # theta [b_i, b_j] = [theta b_i, theta b_j], all j at once
            lhs = self.theta @ ads[i]
            rhs = self.coords_many([images[i].bracket(y) for y in images])
            if lhs != rhs:
                raise PairInvariantError("theta homomorphism", f"fails on basis element {i}")
        h, s = self.h, self.gsigma
        if h.dim + s.dim != d:
            raise PairInvariantError("eigenspace splitting", "g != h + g^sigma")
        for (a, sa), (b, sb), target, label in (((h, "h"), (h, "h"), h, "[h,h] in h"),
                                               ((h, "h"), (s, "s"), s, "[h,g^sigma] in g^sigma"),
                                               ((s, "s"), (s, "s"), h, "[g^sigma,g^sigma] in h")):
            am, bm = self.matrices(a), self.matrices(b)
            for x in am:
                if not bm:
                    break
                c = self.coords_many([x.bracket(y) for y in bm])
                if not all(v in target for v in c.columns()):
                    raise PairInvariantError("Z/2 grading", label)
        B = self.trace_form
        if not B.det():
            raise PairInvariantError("trace form nondegenerate on g")
        for i, a in enumerate(ads):
            if a.T @ B + B @ a != Matrix.zeros(d, d, self.field):
                raise PairInvariantError("trace form invariance", f"ad(b_{i}) is not B-skew")
        if self.theta.T @ B @ self.theta != B:
            raise PairInvariantError("trace form theta-invariance")
        hb, sb = h.basis, s.basis
        if h.dim and s.dim and not (hb.T @ B @ sb).is_zero():
            raise PairInvariantError("h orthogonal to g^sigma")
        for sub, label in ((hb, "h"), (sb, "g^sigma")):
            if sub.cols and not (sub.T @ B @ sub).det():
                raise PairInvariantError(f"trace form nondegenerate on {label}")
        return self


# --------------------------------------------------------------------------
# catalog


def _lie_subalgebra(n: int, constraints: Sequence[Sequence], field=QQ) -> list[Matrix]:
    """Canonical basis of ``{X in gl_n : c . vec(X) = 0}``."""
    if constraints:
        sol = kernel(Matrix(constraints, field))
    else:
        sol = Subspace.full(n * n, field)
    return [Matrix.from_flat(n, n, v, field) for v in sol.vectors]


def _trace_row(n: int, idx: Sequence[int] | None = None) -> list[int]:
    idx = range(n) if idx is None else idx
    row = [0] * (n * n)
    for i in idx:
        row[i * n + i] = 1
    return row


def _form_preserving_rows(q: Matrix) -> list[list]:
    """Rows expressing ``X^T Q + Q X = 0`` in the entries of ``X``."""
    n = q.rows
    rows = []
    for a in range(n):
        for b in range(n):
            row = [0] * (n * n)
            # (X^T Q)_{ab} = sum_k X_{ka} Q_{kb}; (Q X)_{ab} = sum_k Q_{ak} X_{kb}
            for k in range(n):
                row[k * n + a] += q[k, b]
                row[k * n + b] += q[a, k]
            rows.append(row)
    return rows


def _antidiag(n: int) -> Matrix:
    return Matrix([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])


def _from_theta_map(name, family, size, n, basis, theta_fn: Callable[[Matrix], Matrix]):
    pre = SymmetricPairAlgebra(n, tuple(basis), Matrix.identity(len(basis)), name, family, size)
    theta = pre.coords_many([theta_fn(b) for b in basis])
    return SymmetricPairAlgebra(n, tuple(basis), theta, name, family, size)


def _conj(d: Matrix) -> Callable[[Matrix], Matrix]:
    inv = d.inverse()
    return lambda x: d @ x @ inv


def _diag_pair(size: int) -> SymmetricPairAlgebra:
    n = 2 * size
    cons = [_trace_row(n, range(size)), _trace_row(n, range(size, n))]
    for r in range(n):
        for c in range(n):
            if (r < size) != (c < size):
                row = [0] * (n * n)
                row[r * n + c] = 1
                cons.append(row)
    swap = Matrix([[1 if (j == (i + size) % n) else 0 for j in range(n)] for i in range(n)])
    return _from_theta_map(f"(sl{size}+sl{size}, sl{size})", "diag-sl", size, n,
                           _lie_subalgebra(n, cons), _conj(swap))


def _sl_so(size: int) -> SymmetricPairAlgebra:
    j = _antidiag(size)
    basis = _lie_subalgebra(size, [_trace_row(size)])
    return _from_theta_map(f"(sl{size}, so{size}) split", "sl-so", size, size, basis,
                           lambda x: -(j @ x.T @ j))


def _sl_slsl(size: int) -> SymmetricPairAlgebra:
    n = 2 * size
    d = Matrix.diag([1] * size + [-1] * size)
    basis = _lie_subalgebra(n, [_trace_row(n)])
    return _from_theta_map(f"(sl{n}, sl{size}+sl{size}+gl1)", "sl-slsl", size, n, basis, _conj(d))


def _sp_gl(size: int) -> SymmetricPairAlgebra:
    n = 2 * size
    omega = Matrix([[1 if j == i + size else -1 if i == j + size else 0 for j in range(n)] for i in range(n)])
    d = Matrix.diag([1] * size + [-1] * size)
    basis = _lie_subalgebra(n, _form_preserving_rows(omega))
    return _from_theta_map(f"(sp{n}, gl{size}) split", "sp-gl", size, n, basis, _conj(d))


def _so_so(size: int, k: int) -> SymmetricPairAlgebra:
    n = 2 * size + k
    q = Matrix.block_diag(_antidiag(size + k), _antidiag(size))
    d = Matrix.diag([1] * (size + k) + [-1] * size)
    basis = _lie_subalgebra(n, _form_preserving_rows(q))
    return _from_theta_map(f"(so{n}, so{size + k}+so{size}) split", f"so-so{k}", size, n, basis, _conj(d))


FAMILIES = {
    "diag-sl": "(sl_n + sl_n, sl_n), theta swaps the factors",
    "sl-so": "(sl_m, so_m) for the antidiagonal form",
    "sl-slsl": "(sl_2m, sl_m + sl_m + gl_1)",
    "sp-gl": "(sp_2m, gl_m)",
    "so-so0": "(so_2m, so_m + so_m)",
    "so-so1": "(so_2m+1, so_m+1 + so_m)",
    "so-so2": "(so_2m+2, so_m+2 + so_m)",
}


def catalog(family: str, size: int) -> SymmetricPairAlgebra:
    """Validated pair from the classical nice families (split forms, size <= 4)."""
    if family not in FAMILIES:
        raise ValueError(f"unsupported family {family!r}; choose from {sorted(FAMILIES)}")
    if not 1 <= size <= 4:
        raise ValueError("size must be between 1 and 4")
    if family == "diag-sl":
        if size < 2:
            raise ValueError("diag-sl needs size >= 2")
        pair = _diag_pair(size)
    elif family == "sl-so":
        if size < 2:
            raise ValueError("sl-so needs size >= 2")
        pair = _sl_so(size)
    elif family == "sl-slsl":
        pair = _sl_slsl(size)
    elif family == "sp-gl":
        pair = _sp_gl(size)
    else:
        k = int(family[-1])
        if 2 * size + k < 3:
            raise ValueError("so-so needs 2m + k >= 3")
        pair = _so_so(size, k)
    return pair.validate()


def _parse_matrix(obj, n: int, field) -> Matrix:
    if not isinstance(obj, list):
        raise PairInvariantError("schema", "matrices must be JSON arrays")
    if obj and all(isinstance(r, list) for r in obj):
        rows = obj
    elif len(obj) == n * n:
        rows = [obj[r * n:(r + 1) * n] for r in range(n)]
    else:
        raise PairInvariantError("schema", f"expected {n * n} row-major entries or {n} rows")
    try:
        return Matrix(rows, field)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise PairInvariantError("schema", f"bad matrix entry: {exc}") from None


def load_pair(data: dict, field=QQ) -> tuple[SymmetricPairAlgebra, list["NilpotentGSigma"]]:
    """Build and validate a pair from the JSON input schema.

    ``{"n": int, "g_basis": [matrix, ...], "theta": matrix}``, with optional
    ``"name"`` and ``"nilpotents"`` (test elements of ``g^sigma``). Matrix
    entries are ``"p/q"`` strings or integers.
    """
    if not isinstance(data, dict):
        raise PairInvariantError("schema", "top level must be an object")
    for key in ("n", "g_basis", "theta"):
        if key not in data:
            raise PairInvariantError("schema", f"missing key {key!r}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PairInvariantError("schema", "n must be a positive integer")
    if not isinstance(data["g_basis"], list) or not data["g_basis"]:
        raise PairInvariantError("schema", "g_basis must be a nonempty list")
    basis = tuple(_parse_matrix(b, n, field) for b in data["g_basis"])
    d = len(basis)
    theta = _parse_matrix(data["theta"], d, field)
    pair = SymmetricPairAlgebra(n, basis, theta, str(data.get("name", "custom")))
    pair.validate()
    reps = []
    for k, obj in enumerate(data.get("nilpotents", [])):
        x = _parse_matrix(obj, n, field)
        try:
            reps.append(NilpotentGSigma.certify(pair, x, f"input[{k}]"))
        except ValueError as exc:
            raise PairInvariantError("nilpotent in g^sigma", str(exc)) from None
    return pair, reps


def load_pair_json(text: str, field=QQ):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PairInvariantError("schema", f"invalid JSON: {exc}") from None
    return load_pair(data, field)


def pair_to_json(pair: SymmetricPairAlgebra) -> dict:
    return {
        "name": pair.name,
        "n": pair.n,
        "g_basis": [[str(x) for x in b.flat()] for b in pair.g_basis],
        "theta": [[str(x) for x in r] for r in pair.theta.to_lists()],
    }


# --------------------------------------------------------------------------
# nilpotent elements and graded triples


@dataclass(frozen=True)
class NilpotentGSigma:
    x: Matrix
    label: str = ""

    @classmethod
    def certify(cls, pair: SymmetricPairAlgebra, x: Matrix, label: str = "") -> "NilpotentGSigma":
        if not pair.in_gsigma(x):
            raise ValueError(f"{label or x} is not in g^sigma")
        if not is_nilpotent(x):
            raise ValueError(f"{label or x} is not nilpotent")
        return cls(x, label)


@dataclass(frozen=True)
class GradedTriple:
    e: Matrix
    h: Matrix
    f: Matrix

    def is_valid(self, pair: SymmetricPairAlgebra) -> bool:
        e, h, f = self.e, self.h, self.f
        return (h.bracket(e) == e.scale(2) and h.bracket(f) == f.scale(-2) and e.bracket(f) == h
                and pair.coords(h) in pair.h and pair.in_gsigma(e) and pair.in_gsigma(f))


def _unwrap(x) -> Matrix:
    return x.x if isinstance(x, NilpotentGSigma) else x


def _pick(solution, rng: random.Random | None) -> tuple:
    particular, homogeneous = solution
    if rng is None or not homogeneous.dim:
        return particular
    shift = homogeneous.combination([rng.randint(-2, 2) for _ in range(homogeneous.dim)])
    return tuple(a + b for a, b in zip(particular, shift))


def graded_sl2_triple(pair: SymmetricPairAlgebra, x, rng: random.Random | None = None) -> GradedTriple:
    """Graded triple ``(x, h, f)`` with ``h`` in ``h`` and ``f`` in ``g^sigma``.

    First ``h = [x, z]`` for some ``z`` in ``g^sigma`` with ``[h, x] = 2x``,
    then ``f`` in ``g^sigma`` with ``[x, f] = h`` and ``[h, f] = -2f``.
    With ``rng`` a random point of each affine solution set is used
    instead of the particular solution.
    """
    x = _unwrap(x)
    if x.is_zero():
        raise NoGradedTripleError("no graded triple through x = 0")
    if not pair.in_gsigma(x):
        raise NoGradedTripleError("x is not in g^sigma")
    gs = pair.matrices(pair.gsigma)
    n2 = pair.n * pair.n
    cols = [_flat(x.bracket(s).bracket(x)) for s in gs]
    sol = solve_affine(Matrix.from_columns(cols, n2, pair.field), _flat(x.scale(2)))
    if sol is None:
        raise NoGradedTripleError("no h = [x, z] with [h, x] = 2x")
    z = sum((s.scale(c) for s, c in zip(gs, _pick(sol, rng))), Matrix.zeros(pair.n, pair.n, pair.field))
    h = x.bracket(z)
    cols = [_flat(x.bracket(s)) + _flat(h.bracket(s) + s.scale(2)) for s in gs]
    rhs = _flat(h) + (pair.field.zero,) * n2
    sol = solve_affine(Matrix.from_columns(cols, 2 * n2, pair.field), rhs)
    if sol is None:
        raise NoGradedTripleError("no f with [x, f] = h and [h, f] = -2f")
    f = sum((s.scale(c) for s, c in zip(gs, _pick(sol, rng))), Matrix.zeros(pair.n, pair.n, pair.field))
    return GradedTriple(x, h, f)


def adjoint_graded_module(pair: SymmetricPairAlgebra, triple: GradedTriple) -> GradedSl2Module:
    """``g`` under ``ad`` of the triple, graded by ``V0 = h``, ``V1 = g^sigma``."""
    return GradedSl2Module(pair.ad(triple.e), pair.ad(triple.h), pair.ad(triple.f), pair.h, pair.gsigma)


def centralizer_in_gsigma(pair: SymmetricPairAlgebra, x, within: Subspace | None = None) -> Subspace:
    """Coordinates of ``{y in g^sigma : [x, y] = 0}`` (or inside ``within``)."""
    x = _unwrap(x)
    space = pair.gsigma if within is None else within
    ys = pair.matrices(space)
    if not ys:
        return Subspace.zero(pair.dim, pair.field)
    k = kernel(Matrix.from_columns([_flat(x.bracket(y)) for y in ys], pair.n * pair.n, pair.field))
    b = space.basis
    return Subspace(pair.dim, [b.apply(c) for c in k.vectors], pair.field)


def is_distinguished(pair: SymmetricPairAlgebra, x) -> bool:
    """No nonzero semisimple element centralises ``x`` in ``(g_s)^sigma``.

    A centralizer is stable under Jordan decomposition, so this holds iff
    every element of the centralizer is nilpotent.
    """
    x = _unwrap(x)
    gs_sigma = pair.derived & pair.gsigma
    cent = centralizer_in_gsigma(pair, x, within=gs_sigma)
    mats = Subspace(pair.n * pair.n, [_flat(m) for m in pair.matrices(cent)], pair.field)
    return subspace_all_nilpotent(mats, pair.n)


def defect_of_nilpotent(pair: SymmetricPairAlgebra, x, rng: random.Random | None = None) -> int:
    return defect_definitional(adjoint_graded_module(pair, graded_sl2_triple(pair, x, rng)))


def adjoint_decomposition(pair: SymmetricPairAlgebra, x, rng: random.Random | None = None) -> GradedDecomposition:
    return decompose(adjoint_graded_module(pair, graded_sl2_triple(pair, x, rng)))


def sakellaridis_margin(pair: SymmetricPairAlgebra, x, dec: GradedDecomposition | None = None) -> int:
    """``sum(lam_i + 2 : w_i (-1)^lam_i = -1) - dim g^sigma`` for ``g`` under ``pi_x``."""
    if dec is None:
        dec = adjoint_decomposition(pair, x)
    s = sum(k * (lam + 2) for (lam, w), k in dec.items() if w * (-1) ** lam == -1)
    return s - pair.gsigma.dim


@dataclass
class RepresentativeRecord:
    label: str
    distinguished: bool
    defect: int | None
    margin: int | None


@dataclass
class NegativeDefectReport:
    pair: str
    records: list[RepresentativeRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.defect is not None and r.defect < 0 for r in self.records if r.distinguished)


def check_negative_distinguished_defect(pair: SymmetricPairAlgebra, reps: Sequence) -> NegativeDefectReport:
    report = NegativeDefectReport(pair.name)
    for k, rep in enumerate(reps):
        x = _unwrap(rep)
        label = rep.label if isinstance(rep, NilpotentGSigma) and rep.label else f"rep[{k}]"
        dist = is_distinguished(pair, x)
        defect = margin = None
        if not x.is_zero():
            dec = adjoint_decomposition(pair, x)
            defect = defect_closed_form(dec)
            if dist:
                margin = sakellaridis_margin(pair, x, dec)
        report.records.append(RepresentativeRecord(label, dist, defect, margin))
    return report


# --------------------------------------------------------------------------
# representatives


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def jordan_nilpotent(parts: Sequence[int], field=QQ) -> Matrix:
    """Block diagonal nilpotent with upper shift blocks of the given sizes."""
    n = sum(parts)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for a in parts:
        for r in range(a - 1):
            rows[off + r][off + r + 1] = 1
        off += a
    return Matrix(rows, field)


def _label(parts) -> str:
    return "partition " + "+".join(map(str, parts))


def _split_form_basis(parts: Sequence[int]) -> Matrix:
    """Columns giving an isometry from ``J_m`` to ``diag(eps_i J_{parts_i})``.

    Odd blocks get alternating signs so the middle vectors pair into
    hyperbolic planes over QQ.
    """
    from fractions import Fraction

    m = sum(parts)

    def unit(i):
        v = [Fraction(0)] * m
        v[i] = Fraction(1)
        return v

    hyper, middles = [], []
    off, odd_seen = 0, 0
    for a in parts:
        eps = 1
        if a % 2:
            eps = 1 if odd_seen % 2 == 0 else -1
            odd_seen += 1
        for r in range(a // 2):
            p = unit(off + r)
            q = [eps * x for x in unit(off + a - 1 - r)]
            hyper.append((p, q))
        if a % 2:
            middles.append(unit(off + a // 2))
        off += a
    for t in range(0, len(middles) - 1, 2):
        u, w = middles[t], middles[t + 1]
        hyper.append(([x + y for x, y in zip(u, w)], [(x - y) / 2 for x, y in zip(u, w)]))
    single = [middles[-1]] if len(middles) % 2 else []
    cols = [p for p, _ in hyper] + single + [q for _, q in reversed(hyper)]
    return Matrix.from_columns(cols, m)


def nilpotent_representatives(pair: SymmetricPairAlgebra) -> list[NilpotentGSigma]:
    """One nilpotent of ``g^sigma`` per partition (not a full orbit classification)."""
    if pair.family == "diag-sl":
        out = []
        for parts in partitions(pair.size):
            nil = jordan_nilpotent(parts, pair.field)
            x = Matrix.block_diag(nil, -nil)
            out.append(NilpotentGSigma.certify(pair, x, _label(parts)))
        return out
    if pair.family == "sl-so":
        out = []
        for parts in partitions(pair.size):
            s = _split_form_basis(parts)
            x = s.inverse() @ jordan_nilpotent(parts) @ s
            out.append(NilpotentGSigma.certify(pair, x, _label(parts)))
        return out
    raise ValueError(f"no representative list for family {pair.family!r}")

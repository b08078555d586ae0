"""Exact scalars, matrices and subspaces over the rationals and prime fields.

Everything here is immutable. Heavy routines (row reduction, products,
powers) drop to plain Python integers internally: rational rows are
cleared of denominators and reduced fraction-free, prime-field rows are
reduced as residues.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = [
    "Fp", "QQ", "GF", "Rationals", "PrimeField", "Matrix", "Subspace",
    "kernel", "solve_affine", "is_nilpotent", "is_semisimple",
    "subspace_all_nilpotent", "charpoly", "scalar_text", "parse_scalar",
]


class Fp:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, k: int):
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Rationals:
    """The field of rational numbers, elements are ``Fraction``."""

    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        raise TypeError(f"cannot read {x!r} as an exact rational")

    def __repr__(self):
        return "QQ"

    # raw helpers: rows of Fractions <-> rows of ints
    def raw_rows(self, rows):
        out = []
        for row in rows:
            den = reduce(lcm, (x.denominator for x in row), 1)
            out.append([x.numerator * (den // x.denominator) for x in row])
        return out

    def raw_matrix(self, rows):
        """Integer matrix ``N`` and denominator ``D`` with ``rows == N / D``."""
        den = reduce(lcm, (x.denominator for row in rows for x in row), 1)
        return [[x.numerator * (den // x.denominator) for x in row] for row in rows], den


class PrimeField:
    """The prime field F_p; elements are :class:`Fp`."""

    characteristic: int

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / x.denominator
        if isinstance(x, str):
            return self(Fraction(x.strip()))
        raise TypeError(f"cannot read {x!r} as an element of F_{self.p}")

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def _same_field(a, b) -> bool:
    return a is b or a == b


def scalar_text(x) -> str:
    """Lossless text form: ``"p/q"`` or ``"p"`` for rationals, the residue for F_p."""
    return str(x)


def parse_scalar(text: str, field=QQ):
    return field(text)


# --------------------------------------------------------------------------
# Row reduction on raw integer rows.


def _rref_int(rows: list[list[int]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Fraction-free Gauss-Jordan over ZZ; returns rational RREF rows and pivots."""
    rows = [r[:] for r in rows if any(r)]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        pv = pr[col]
        for r in range(len(rows)):
            if r == rank:
                continue
            a = rows[r][col]
            if not a:
                continue
            g = gcd(pv, a)
            m1, m2 = pv // g, a // g
            new = [m1 * x - m2 * y for x, y in zip(rows[r], pr)]
            c = reduce(gcd, new, 0)
            if c > 1:
                new = [x // c for x in new]
            rows[r] = new
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    out = []
    for r, col in enumerate(pivots):
        pv = rows[r][col]
        out.append([Fraction(x, pv) for x in rows[r]])
    return out, pivots


def _rref_mod(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    rows = [[x % p for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        pr = [(x * inv) % p for x in rows[rank]]
        rows[rank] = pr
        for r in range(len(rows)):
            if r == rank:
                continue
            a = rows[r][col]
            if a:
                rows[r] = [(x - a * y) % p for x, y in zip(rows[r], pr)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _rref_rows(rows: Sequence[Sequence], ncols: int, field) -> tuple[list[list], list[int]]:
    """RREF (nonzero rows only) of field-element rows, plus pivot columns."""
    if not rows:
        return [], []
    if field is QQ or isinstance(field, Rationals):
        out, piv = _rref_int(field.raw_rows(rows), ncols)
        return out, piv
    p = field.p
    out, piv = _rref_mod([[x.v for x in r] for r in rows], ncols, p)
    return [[Fp(x, p) for x in r] for r in out], piv


def _raw(rows, field):
    """(integer rows, scale, modulus) for fast products; modulus 0 means ZZ."""
    if isinstance(field, Rationals):
        n, d = field.raw_matrix(rows)
        return n, d, 0
    return [[x.v for x in r] for r in rows], 1, field.p


def _int_matmul(a, b, mod=0):
    bt = list(zip(*b))
    if mod:
        return [[sum(x * y for x, y in zip(row, col)) % mod for col in bt] for row in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# --------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over ``QQ`` or ``GF(p)``."""

    __slots__ = ("rows", "cols", "field", "_data", "_hash", "_rawc")

    def __init__(self, data: Iterable[Iterable], field=QQ, *, cols: int | None = None):
        self.field = field
        self._data = tuple(tuple(field(x) for x in row) for row in data)
        self.rows = len(self._data)
        if self.rows:
            self.cols = len(self._data[0])
            if any(len(r) != self.cols for r in self._data):
                raise ValueError("ragged matrix rows")
        else:
            self.cols = cols or 0
        self._hash = None
        self._rawc = None

    @classmethod
    def _trusted(cls, data, field, cols=None):
        m = object.__new__(cls)
        m.field = field
        m._data = data
        m.rows = len(data)
        m.cols = len(data[0]) if data else (cols or 0)
        m._hash = None
        m._rawc = None
        return m

    def raw(self):
        """Cached ``(integer rows, denominator, modulus)`` form."""
        if self._rawc is None:
            self._rawc = _raw(self._data, self.field)
        return self._rawc

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence, field=QQ) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)], field, cols=cols)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, field=QQ) -> "Matrix":
        cols = rows if cols is None else cols
        z = field.zero
        return cls._trusted(tuple((z,) * cols for _ in range(rows)), field, cols)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls._trusted(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n)

    @classmethod
    def diag(cls, values: Sequence, field=QQ) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def unit(cls, n: int, i: int, j: int, field=QQ) -> "Matrix":
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)], field)

    @classmethod
    def column(cls, vec: Sequence, field=QQ) -> "Matrix":
        return cls([[x] for x in vec], field, cols=1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int, field=QQ) -> "Matrix":
        if not columns:
            return cls.zeros(nrows, 0, field)
        return cls(list(zip(*columns)), field)

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        field = blocks[0].field
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = b._data[i]
            r0 += b.rows
            c0 += b.cols
        return cls._trusted(tuple(map(tuple, out)), field, m)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self._data]

    def flat(self) -> tuple:
        """Row-major entries."""
        return tuple(x for r in self._data for x in r)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self._data)), self.field, self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def trace(self):
        self._require_square()
        return sum((self._data[i][i] for i in range(self.rows)), self.field.zero)

    def _require_square(self):
        if self.rows != self.cols:
            raise ValueError(f"expected a square matrix, got {self.rows}x{self.cols}")

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Matrix"):
        if not _same_field(self.field, other.field):
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(tuple(tuple(x + y for x, y in zip(a, b))
                                     for a, b in zip(self._data, other._data)), self.field, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(tuple(tuple(x - y for x, y in zip(a, b))
                                     for a, b in zip(self._data, other._data)), self.field, self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-x for x in r) for r in self._data), self.field, self.cols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._trusted(tuple(tuple(c * x for x in r) for r in self._data), self.field, self.cols)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if not self.rows or not other.cols:
            return Matrix.zeros(self.rows, other.cols, self.field)
        if not self.cols:
            return Matrix.zeros(self.rows, other.cols, self.field)
        a, da, mod = self.raw()
        b, db, _ = other.raw()
        prod = _int_matmul(a, b, mod)
        return Matrix._from_raw(prod, da * db, self.field)

    @classmethod
    def _from_raw(cls, rows, den, field):
        if isinstance(field, Rationals):
            if den == 1:
                data = tuple(tuple(Fraction(x) for x in r) for r in rows)
            else:
                data = tuple(tuple(Fraction(x, den) for x in r) for r in rows)
        else:
            p = field.p
            data = tuple(tuple(Fp(x, p) for x in r) for r in rows)
        return cls._trusted(data, field)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        a, da, mod = self.raw()
        v, dv, _ = _raw([[self.field(x) for x in vec]], self.field)
        v = v[0]
        nz = [(k, x) for k, x in enumerate(v) if x]
        out = []
        for r in a:
            s = sum(r[k] * x for k, x in nz)
            out.append(s % mod if mod else s)
        return Matrix._from_raw([out], da * dv, self.field)._data[0]

    def __pow__(self, k: int) -> "Matrix":
        self._require_square()
        if k < 0:
            raise ValueError("negative power")
        a, d, mod = self.raw()
        n = self.rows
        result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        den = 1
        base, bden = a, d
        while k:
            if k & 1:
                result = _int_matmul(result, base, mod)
                den *= bden
            k >>= 1
            if k:
                base = _int_matmul(base, base, mod)
                bden *= bden
        return Matrix._from_raw(result, den, self.field)

    def bracket(self, other: "Matrix") -> "Matrix":
        """Commutator ``self @ other - other @ self``."""
        return self @ other - other @ self

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return _same_field(self.field, other.field) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"

    # -- linear algebra -------------------------------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, piv = _rref_rows(self._data, self.cols, self.field)
        if not rows:
            return Matrix.zeros(0, self.cols, self.field), ()
        return Matrix._trusted(tuple(map(tuple, rows)), self.field), tuple(piv)

    def rank(self) -> int:
        return len(_rref_rows(self._data, self.cols, self.field)[1])

    def det(self):
        self._require_square()
        n = self.rows
        if isinstance(self.field, Rationals):
            a, den = self.field.raw_matrix(self._data)
            return Fraction(_bareiss_det(a), den ** n) if n else Fraction(1)
        p = self.field.p
        a = [[x.v for x in r] for r in self._data]
        det = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] % p), None)
            if piv is None:
                return self.field.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det = det * a[c][c] % p
            inv = pow(a[c][c], -1, p)
            for r in range(c + 1, n):
                f = a[r][c] * inv % p
                if f:
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
        return Fp(det, p)

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self.rows
        aug = [list(r) + [self.field.one if i == j else self.field.zero for j in range(n)]
               for i, r in enumerate(self._data)]
        rows, piv = _rref_rows(aug, 2 * n, self.field)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in rows[:n]], self.field)


def _bareiss_det(a: list[list[int]]) -> int:
    a = [r[:] for r in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((r for r in range(k + 1, n) if a[r][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --------------------------------------------------------------------------


class Subspace:
    """Linear subspace of F^n held in canonical form.

    The basis vectors are the nonzero rows of the reduced row-echelon form
    of any spanning set, so the basis matrix (vectors as columns) is in
    reduced column-echelon form and equal subspaces compare equal.
    """

    __slots__ = ("ambient_dim", "field", "_vectors", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = (), field=QQ):
        vecs = [tuple(field(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError(f"vector length does not match ambient dimension {ambient_dim}")
        rows, piv = _rref_rows(vecs, ambient_dim, field)
        self.ambient_dim = ambient_dim
        self.field = field
        self._vectors = tuple(map(tuple, rows))
        self._pivots = tuple(piv)

    @classmethod
    def zero(cls, n: int, field=QQ) -> "Subspace":
        return cls(n, (), field)

    @classmethod
    def full(cls, n: int, field=QQ) -> "Subspace":
        return cls(n, Matrix.identity(n, field).to_lists(), field)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int], field=QQ) -> "Subspace":
        """Span of the standard basis vectors with the given 0-based indices."""
        idx = set(indices)
        return cls(n, [[1 if k == i else 0 for k in range(n)] for i in sorted(idx)], field)

    @property
    def dim(self) -> int:
        return len(self._vectors)

    @property
    def vectors(self) -> tuple[tuple, ...]:
        return self._vectors

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def basis(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        if not self._vectors:
            return Matrix.zeros(self.ambient_dim, 0, self.field)
        return Matrix._trusted(tuple(zip(*self._vectors)), self.field)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the canonical basis; raises if ``v`` is outside."""
        v = tuple(self.field(x) for x in v)
        c = tuple(v[p] for p in self._pivots)
        z = self.field.zero
        recon = [z] * self.ambient_dim
        for coef, vec in zip(c, self._vectors):
            if coef:
                for k, x in enumerate(vec):
                    if x:
                        recon[k] += coef * x
        if tuple(recon) != v:
            raise ValueError("vector is not in the subspace")
        return c

    def combination(self, coeffs: Sequence) -> tuple:
        z = self.field.zero
        out = [z] * self.ambient_dim
        for coef, vec in zip(coeffs, self._vectors):
            coef = self.field(coef)
            if coef:
                for k, x in enumerate(vec):
                    if x:
                        out[k] += coef * x
        return tuple(out)

    def __contains__(self, v: Sequence) -> bool:
        try:
            self.coordinates(v)
        except ValueError:
            return False
        return True

    def __le__(self, other: "Subspace") -> bool:
        return all(v in other for v in self._vectors)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and _same_field(self.field, other.field)
                and self._vectors == other._vectors)

    def __hash__(self):
        return hash((self.ambient_dim, self._vectors))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        return Subspace(self.ambient_dim, self._vectors + other._vectors, self.field)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def _compatible(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")
        if not _same_field(self.field, other.field):
            raise ValueError("subspaces over different fields")

    def annihilator_equations(self) -> Matrix:
        """Rows ``a`` with ``a . v = 0`` exactly for ``v`` in this subspace."""
        n = self.ambient_dim
        if not self._vectors:
            return Matrix.identity(n, self.field)
        ann = kernel(Matrix._trusted(self._vectors, self.field))
        if not ann.dim:
            return Matrix.zeros(0, n, self.field)
        return Matrix._trusted(ann._vectors, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        if not self._vectors or not other._vectors:
            return Subspace.zero(self.ambient_dim, self.field)
        eqs = other.annihilator_equations()
        if eqs.rows == 0:
            return self
        b = self.basis
        k = kernel(eqs @ b)
        return Subspace(self.ambient_dim, [b.apply(c) for c in k.vectors], self.field)

    def image(self, m: Matrix) -> "Subspace":
        """Image of this subspace under ``m`` (acting on column vectors)."""
        if m.cols != self.ambient_dim:
            raise ValueError("matrix does not act on this space")
        if not self._vectors:
            return Subspace.zero(m.rows, self.field)
        return Subspace(m.rows, (m @ self.basis).T._data, self.field)

    def preimage(self, m: Matrix) -> "Subspace":
        """``{v : m v in self}``."""
        eqs = self.annihilator_equations()
        if eqs.rows == 0:
            return Subspace.full(m.cols, self.field)
        return kernel(eqs @ m)

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.field}^{self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    rows, piv = _rref_rows(m._data, m.cols, m.field)
    return _kernel_from_rref(rows, piv, m.cols, m.field)


def _kernel_from_rref(rows, piv, ncols, field) -> Subspace:
    pivset = set(piv)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, c in enumerate(piv):
            v[c] = -rows[r][f]
        vecs.append(v)
    return Subspace(ncols, vecs, field)


def solve_affine(m: Matrix, b: Sequence):
    """Solve ``m x = b``.

    Returns ``(particular, homogeneous)`` where ``homogeneous`` is the
    kernel of ``m``, or ``None`` when the system is inconsistent.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    field = m.field
    n = m.cols
    aug = [list(r) + [field(x)] for r, x in zip(m._data, b)]
    rows, piv = _rref_rows(aug, n + 1, field)
    if piv and piv[-1] == n:
        return None
    x = [field.zero] * n
    for r, c in enumerate(piv):
        x[c] = rows[r][n]
    return tuple(x), _kernel_from_rref([r[:n] for r in rows], piv, n, field)


# --------------------------------------------------------------------------
# predicates


def _int_is_nilpotent(a: list[list[int]], mod: int = 0) -> bool:
    n = len(a)
    if n == 0:
        return True
    power = 1
    cur = a
    while power < n:
        cur = _int_matmul(cur, cur, mod)
        power *= 2
        if not any(x for r in cur for x in r):
            return True
    return not any(x for r in cur for x in r)


def is_nilpotent(m: Matrix) -> bool:
    """True iff ``m**n == 0`` for ``n`` the size of ``m``."""
    m._require_square()
    a, _, mod = m.raw()
    return _int_is_nilpotent(a, mod)


def charpoly(m: Matrix) -> list:
    """Characteristic polynomial ``det(x I - m)``, coefficients low degree first.

    Hessenberg reduction followed by the usual recurrence; valid over any field.
    """
    m._require_square()
    n = m.rows
    field = m.field
    h = m.to_lists()
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if h[i][k - 1]), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for r in h:
                r[k], r[piv] = r[piv], r[k]
        t = h[k][k - 1]
        for i in range(k + 1, n):
            u = h[i][k - 1] / t
            if u:
                h[i] = [x - u * y for x, y in zip(h[i], h[k])]
                for r in h:
                    r[k] = r[k] + u * r[i]
    polys = [[field.one]]
    for k in range(1, n + 1):
        # p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k} h[i-1][k-1] prod h[j][j-1] p_{i-1}
        prev = polys[k - 1]
        cur = [field.zero] + prev
        a = h[k - 1][k - 1]
        for d, c in enumerate(prev):
            cur[d] -= a * c
        t = field.one
        for i in range(k - 1, 0, -1):
            t = t * h[i][i - 1]
            coef = t * h[i - 1][k - 1]
            if coef:
                for d, c in enumerate(polys[i - 1]):
                    cur[d] -= coef * c
        polys.append(cur)
    return polys[n]


def _poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a, b = _poly_trim(a), _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, x in enumerate(b):
            a[i + shift] -= c * x
        a = _poly_trim(a)
    return q, a


def _poly_gcd(a, b):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a] if a else a


def _poly_eval_matrix(p, m: Matrix) -> Matrix:
    n = m.rows
    acc = Matrix.zeros(n, n, m.field)
    ident = Matrix.identity(n, m.field)
    for c in reversed(p):
        acc = acc @ m + ident.scale(c)
    return acc


def is_semisimple(m: Matrix) -> bool:
    """True iff the minimal polynomial of ``m`` is squarefree (rational input only)."""
    m._require_square()
    if not isinstance(m.field, Rationals):
        raise ValueError("semisimplicity test is only defined over QQ here")
    if m.rows == 0:
        return True
    cp = charpoly(m)
    deriv = [k * c for k, c in enumerate(cp)][1:]
    g = _poly_gcd(cp, deriv)
    rad, rem = _poly_divmod(cp, g)
    assert not rem
    return _poly_eval_matrix(rad, m).is_zero()


def subspace_all_nilpotent(z: Subspace, n: int | None = None, *, probes: int = 16) -> bool:
    """Decide whether every element of a space of ``n x n`` matrices is nilpotent.

    Elements are read row-major from vectors of length ``n*n``. Entries of
    ``M(c)**n`` are polynomials of degree ``n`` in the coordinates ``c``,
    so they vanish identically iff they vanish on the grid ``{0..n}^k``.
    A few seeded random probes run first; any non-nilpotent probe is
    itself a certificate for ``False``.
    """
    if n is None:
        n = int(round(z.ambient_dim ** 0.5))
    if n * n != z.ambient_dim:
        raise ValueError("ambient dimension is not a square")
    field = z.field
    if not isinstance(field, Rationals) and field.p <= n:
        raise ValueError(f"grid certificate needs p > {n}")
    k = z.dim
    if k == 0:
        return True
    vecs, _, mod = _raw(z.vectors, field)
    mats = [[v[r * n:(r + 1) * n] for r in range(n)] for v in vecs]

    def combo(c):
        out = [[0] * n for _ in range(n)]
        for coef, m in zip(c, mats):
            if coef:
                for r in range(n):
                    row, mr = out[r], m[r]
                    for s in range(n):
                        if mr[s]:
                            row[s] += coef * mr[s]
        if mod:
            out = [[x % mod for x in r] for r in out]
        return out

    rng = random.Random(0x5eed + k)
    for _ in range(probes):
        c = [rng.randint(-3, 3) for _ in range(k)]
        if not _int_is_nilpotent(combo(c), mod):
            return False
    for c in itertools.product(range(n + 1), repeat=k):
        if not _int_is_nilpotent(combo(c), mod):
            return False
    return True

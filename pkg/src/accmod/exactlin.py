"""Exact dense linear algebra over GF(p) and the rationals.

Matrices act on column vectors; subspaces are stored as RREF row bases, which
makes the representation canonical: two SubspaceBasis values describe the same
subspace iff they are entry-wise equal.  GF(p) work runs on int64 arrays
through the `_kernels` backend, rational work on object arrays of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .fields import FieldSpec


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _object_array(shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a[...] = Fraction(0)
    return a


def _rref_object(a: np.ndarray):
    """RREF for object (Fraction) matrices; mirrors the mod-p kernels."""
    r, c = a.shape
    pivs = []
    row = 0
    for col in range(c):
        if row == r:
            break
        sel = -1
        for i in range(row, r):
            if a[i, col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != row:
            a[[row, sel]] = a[[sel, row]]
        pivval = a[row, col]
        if pivval != 1:
            a[row] = a[row] * (Fraction(1) / pivval)
        colvals = a[:, col].copy()
        colvals[row] = Fraction(0)
        for i in range(r):
            if colvals[i] != 0:
                a[i] = a[i] - colvals[i] * a[row]
        pivs.append(col)
        row += 1
    return a, pivs


@dataclass(frozen=True, eq=False)
class Mat:
    """Immutable dense matrix over a FieldSpec."""

    field: FieldSpec
    data: np.ndarray

    @staticmethod
    def make(field: FieldSpec, rows) -> "Mat":
        """Build from nested sequences, canonicalizing every entry."""
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        if field.is_prime_field:
            a = np.zeros((len(rows), ncols), dtype=np.int64)
            for i, r in enumerate(rows):
                for j, v in enumerate(r):
                    a[i, j] = field.coerce(v)
        else:
            a = _object_array((len(rows), ncols))
            for i, r in enumerate(rows):
                for j, v in enumerate(r):
                    a[i, j] = field.coerce(v)
        return Mat(field, _freeze(a))

    @staticmethod
    def from_array(field: FieldSpec, a: np.ndarray) -> "Mat":
        """Wrap an array that is already canonical for the field."""
        if field.is_prime_field:
            a = np.ascontiguousarray(a, dtype=np.int64)
        return Mat(field, _freeze(a))

    @staticmethod
    def zeros(field: FieldSpec, r: int, c: int) -> "Mat":
        if field.is_prime_field:
            return Mat(field, _freeze(np.zeros((r, c), dtype=np.int64)))
        return Mat(field, _freeze(_object_array((r, c))))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Mat":
        if field.is_prime_field:
            return Mat(field, _freeze(np.eye(n, dtype=np.int64)))
        a = _object_array((n, n))
        for i in range(n):
            a[i, i] = Fraction(1)
        return Mat(field, _freeze(a))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> "Mat":
        return Mat(self.field, _freeze(np.ascontiguousarray(self.data.T)))

    def __matmul__(self, other: "Mat") -> "Mat":
        assert self.field == other.field and self.cols == other.rows
        if self.field.is_prime_field:
            out = _kernels.matmul_mod(self.data, other.data, self.field.p)
        else:
            out = self.data @ other.data if self.cols else _object_array(
                (self.rows, other.cols))
        return Mat(self.field, _freeze(out))

    def __add__(self, other: "Mat") -> "Mat":
        assert self.field == other.field
        out = self.data + other.data
        if self.field.is_prime_field:
            out %= self.field.p
        return Mat(self.field, _freeze(out))

    def __sub__(self, other: "Mat") -> "Mat":
        assert self.field == other.field
        out = self.data - other.data
        if self.field.is_prime_field:
            out %= self.field.p
        return Mat(self.field, _freeze(out))

    def __neg__(self) -> "Mat":
        out = -self.data
        if self.field.is_prime_field:
            out %= self.field.p
        return Mat(self.field, _freeze(out))

    def scale(self, c) -> "Mat":
        c = self.field.coerce(c)
        out = self.data * c
        if self.field.is_prime_field:
            out %= self.field.p
        return Mat(self.field, _freeze(out))

    def apply(self, v: np.ndarray) -> np.ndarray:
        """Matrix times column vector, given and returned as 1-D arrays."""
        out = self.data @ v if self.cols else (
            np.zeros(self.rows, dtype=np.int64) if self.field.is_prime_field
            else _object_array((self.rows,)))
        if self.field.is_prime_field:
            out = out % self.field.p
        return out

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        if self.field.is_prime_field:
            work = np.array(self.data, dtype=np.int64)
            red, piv = _kernels.rref_mod(work, self.field.p)
            return Mat(self.field, _freeze(red)), tuple(int(j) for j in piv)
        work = self.data.copy()
        red, piv = _rref_object(work)
        return Mat(self.field, _freeze(red)), tuple(piv)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "SubspaceBasis":
        """Canonical basis of the right null space {v : self @ v = 0}."""
        red, piv = self.rref()
        n = self.cols
        free = [j for j in range(n) if j not in piv]
        if not free:
            return SubspaceBasis.zero(self.field, n)
        vecs = []
        for j in free:
            if self.field.is_prime_field:
                v = np.zeros(n, dtype=np.int64)
                v[j] = 1
                for i, pc in enumerate(piv):
                    v[pc] = (-red.data[i, j]) % self.field.p
            else:
                v = _object_array((n,))
                v[j] = Fraction(1)
                for i, pc in enumerate(piv):
                    v[pc] = -red.data[i, j]
            vecs.append(v)
        return SubspaceBasis.from_vectors(self.field, n, vecs)

    def row_space(self) -> "SubspaceBasis":
        red, piv = self.rref()
        rows = red.data[: len(piv)]
        return SubspaceBasis(self.cols, Mat.from_array(self.field, rows.copy()),
                             tuple(piv))

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.field == other.field
                and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))

    def key(self):
        if self.field.is_prime_field:
            return (self.data.shape, self.data.tobytes())
        return (self.data.shape,
                tuple((f.numerator, f.denominator) for f in self.data.flat))

    def __repr__(self) -> str:
        return f"Mat({self.field}, {self.data.tolist()})"


def hstack(mats: list[Mat]) -> Mat:
    field = mats[0].field
    return Mat.from_array(field, np.hstack([m.data for m in mats]))


def vstack(mats: list[Mat]) -> Mat:
    field = mats[0].field
    return Mat.from_array(field, np.vstack([m.data for m in mats]))


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Subspace of a coordinate space, stored as an RREF row basis."""

    ambient_dim: int
    rows: Mat
    pivots: tuple[int, ...]

    @staticmethod
    def from_vectors(field: FieldSpec, ambient_dim: int, vectors) -> "SubspaceBasis":
        vecs = [np.asarray(v) for v in vectors]
        if not vecs:
            return SubspaceBasis.zero(field, ambient_dim)
        m = Mat.from_array(field, np.vstack([v.reshape(1, -1) for v in vecs])) \
            if field.is_prime_field else Mat(field, _freeze(
                np.vstack([np.asarray(v, dtype=object).reshape(1, -1) for v in vecs])))
        red, piv = m.rref()
        basis_rows = red.data[: len(piv)]
        return SubspaceBasis(ambient_dim,
                             Mat.from_array(field, basis_rows.copy()), tuple(piv))

    @staticmethod
    def zero(field: FieldSpec, ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, Mat.zeros(field, 0, ambient_dim), ())

    @staticmethod
    def full(field: FieldSpec, ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, Mat.identity(field, ambient_dim),
                             tuple(range(ambient_dim)))

    @property
    def field(self) -> FieldSpec:
        return self.rows.field

    @property
    def dim(self) -> int:
        return self.rows.rows

    def reduce_vector(self, v: np.ndarray) -> np.ndarray:
        """Residue of v modulo the subspace (zero iff v is a member)."""
        if self.dim == 0:
            return v
        coeffs = v[list(self.pivots)]
        out = v - coeffs @ self.rows.data
        if self.field.is_prime_field:
            out = out % self.field.p
        return out

    def contains_vector(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce_vector(v) != 0)

    def coords_of(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of a member vector in the RREF basis."""
        coeffs = v[list(self.pivots)] if self.dim else v[:0]
        assert not np.any(self.reduce_vector(v) != 0), "vector outside subspace"
        return coeffs

    def contains(self, other: "SubspaceBasis") -> bool:
        return all(self.contains_vector(other.rows.data[i])
                   for i in range(other.dim))

    def basis_vectors(self):
        for i in range(self.dim):
            yield self.rows.data[i]

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubspaceBasis)
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def key(self):
        return (self.ambient_dim, self.rows.key())

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim {self.dim} of {self.ambient_dim})"


def subspace_sum_intersect(a: SubspaceBasis, b: SubspaceBasis):
    """Zassenhaus: canonical (sum, intersection) of two subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    field = a.field
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        small, big = (a, b) if a.dim == 0 else (b, a)
        return big, small
    left = np.vstack([a.rows.data, b.rows.data])
    right = np.vstack([a.rows.data,
                       np.zeros_like(b.rows.data) if field.is_prime_field
                       else _object_array(b.rows.data.shape)])
    block = Mat.from_array(field, np.hstack([left, right])) \
        if field.is_prime_field else Mat(field, _freeze(np.hstack([left, right])))
    red, piv = block.rref()
    sum_rows, int_rows = [], []
    for i, pc in enumerate(piv):
        if pc < n:
            sum_rows.append(red.data[i, :n])
        else:
            int_rows.append(red.data[i, n:])
    s = SubspaceBasis.from_vectors(field, n, sum_rows)
    t = SubspaceBasis.from_vectors(field, n, int_rows)
    return s, t


def joint_kernel(constraints: list[Mat], unknowns: int,
                 field: FieldSpec | None = None) -> SubspaceBasis:
    """Solution space of a list of homogeneous constraint matrices.

    Every constraint has `unknowns` columns; the empty list yields the full
    space.  This is the single solver behind hom spaces and the x, y search.
    """
    mats = [c for c in constraints if c.rows > 0]
    if not mats:
        assert field is not None, "field required for an empty constraint list"
        return SubspaceBasis.full(field, unknowns)
    for c in mats:
        if c.cols != unknowns:
            raise ValueError(f"constraint has {c.cols} columns, expected {unknowns}")
    return vstack(mats).kernel()


def solve(a: Mat, b: Mat) -> Mat | None:
    """One solution X of a @ X = b (free variables zero), or None."""
    assert a.rows == b.rows
    field = a.field
    n = a.cols
    aug = hstack([a, b]) if field.is_prime_field else Mat(
        field, _freeze(np.hstack([a.data, b.data])))
    red, piv = aug.rref()
    if any(pc >= n for pc in piv):
        return None
    if field.is_prime_field:
        x = np.zeros((n, b.cols), dtype=np.int64)
    else:
        x = _object_array((n, b.cols))
    for i, pc in enumerate(piv):
        x[pc, :] = red.data[i, n:]
    return Mat.from_array(field, x) if field.is_prime_field else Mat(field, _freeze(x))

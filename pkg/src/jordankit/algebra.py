"""The associative matrix algebra A = M_n(K): elements, inversion,
involutions, hermitian/anti-hermitian splitting, and materialized linear
operators on A.
"""

from __future__ import annotations

from . import _kernels as K
from .errors import (NotInvertible, NotInSubspace, RingMismatch,
                     ShapeMismatch, SingularOperator)
from .rings import DualRing, embed_scalar


class Matrix:
    """Rectangular matrix of ring scalars; treated as immutable."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ShapeMismatch("ragged rows")

    @classmethod
    def _new(cls, ring, rows):
        """Internal fast path: adopts `rows` (list of row lists) as is."""
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        return m

    # -- constructors --

    @classmethod
    def zeros(cls, ring, n, m=None):
        m = n if m is None else m
        z = ring.zero()
        return cls._new(ring, [[z] * m for _ in range(n)])

    @classmethod
    def identity(cls, ring, n):
        return cls._new(ring, K.meye(n, ring))

    @classmethod
    def from_ints(cls, ring, rows):
        return cls._new(ring, [[ring.from_int(x) for x in r] for r in rows])

    @classmethod
    def scalar(cls, ring, n, s):
        m = [[ring.zero()] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = s
        return cls._new(ring, m)

    @classmethod
    def unit(cls, ring, n, i, j):
        m = [[ring.zero()] * n for _ in range(n)]
        m[i][j] = ring.one()
        return cls._new(ring, m)

    # -- arithmetic --

    def _same(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        self._same(other)
        return Matrix._new(self.ring, K.madd(self.rows, other.rows))

    def __sub__(self, other):
        self._same(other)
        return Matrix._new(self.ring, K.msub(self.rows, other.rows))

    def __neg__(self):
        return Matrix._new(self.ring, K.mneg(self.rows))

    def __matmul__(self, other):
        self._same(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        return Matrix._new(self.ring, K.matmul(self.rows, other.rows, self.ring))

    def scale(self, s):
        return Matrix._new(self.ring, K.mscale(self.rows, s))

    def transpose(self):
        return Matrix._new(self.ring, K.mtranspose(self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows)

    __hash__ = None

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        body = "; ".join(" ".join(repr(x) for x in r) for r in self.rows)
        return f"[{body}]"

    def is_zero(self):
        z = self.ring.zero()
        return all(x == z for r in self.rows for x in r)

    def map(self, f):
        return Matrix._new(self.ring, [[f(x) for x in r] for r in self.rows])

    # -- linear algebra --

    def solve(self, rhs):
        """X with self @ X = rhs; raises SingularOperator."""
        self._same(rhs)
        if self.nrows != self.ncols or rhs.nrows != self.nrows:
            raise ShapeMismatch("solve needs a square system")
        x = K.gauss_solve(self.rows, rhs.rows, self.ring)
        if x is None:
            raise SingularOperator("no unit pivot")
        return Matrix._new(self.ring, x)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        x = K.gauss_solve(self.rows, K.meye(self.nrows, self.ring), self.ring)
        if x is None:
            raise NotInvertible("no unit pivot")
        return Matrix._new(self.ring, x)

    def is_invertible(self):
        return self.rank() == self.nrows == self.ncols

    def rank(self):
        """Rank; over dual rings this is the re-part rank."""
        ring, rows = self.ring, self.rows
        while isinstance(ring, DualRing):
            rows = [[x.re for x in r] for r in rows]
            ring = ring.base
        return K.gauss_rank(rows, ring)

    def hstack(self, other):
        self._same(other)
        return Matrix._new(self.ring, [a + b
                                       for a, b in zip(self.rows, other.rows)])

    def vstack(self, other):
        self._same(other)
        return Matrix._new(self.ring, [list(r) for r in self.rows]
                           + [list(r) for r in other.rows])

    def submatrix(self, rows, cols):
        return Matrix._new(self.ring,
                           [[self.rows[i][j] for j in cols] for i in rows])

    def flatten(self):
        """Row-major entry list."""
        return [x for r in self.rows for x in r]

    def column(self, j):
        return [r[j] for r in self.rows]

    def embed(self, dst_ring):
        """Structurally embed into an iterated dual extension."""
        src = self.ring
        return Matrix._new(dst_ring,
                           [[embed_scalar(x, src, dst_ring) for x in r]
                            for r in self.rows])

    def max_abs(self):
        """Largest |entry| (float matrices only)."""
        return max((abs(x) for r in self.rows for x in r), default=0.0)


def unflatten(ring, n, m, flat):
    return Matrix._new(ring, [list(flat[i * m:(i + 1) * m]) for i in range(n)])


def dual_combine(base_mat, eps_mat):
    """base + eps*tangent, entrywise, over DualRing(base.ring)."""
    base_mat._same(eps_mat)
    ring = DualRing(base_mat.ring)
    from .rings import Dual
    return Matrix._new(ring, [[Dual(a, b) for a, b in zip(ra, rb)]
                              for ra, rb in zip(base_mat.rows, eps_mat.rows)])


def dual_split(mat):
    """Inverse of dual_combine."""
    ring = mat.ring
    if not isinstance(ring, DualRing):
        from .errors import NotDual
        raise NotDual(f"{ring!r} is not a dual ring")
    re = Matrix._new(ring.base, [[x.re for x in r] for r in mat.rows])
    ep = Matrix._new(ring.base, [[x.eps for x in r] for r in mat.rows])
    return re, ep


def alg_invert(x):
    """Inverse in A = M_n(K); exact over exact rings."""
    return x.inverse()


class Involution:
    """x -> x*: plain transpose, or the adjoint with respect to an
    invertible (skew-)symmetric form B, x* = B^-1 x^T B."""

    __slots__ = ("kind", "form", "symmetry", "_form_inv")

    def __init__(self, kind="transpose", form=None, symmetry="symmetric"):
        if kind not in ("transpose", "form_adjoint"):
            raise ValueError(f"unknown involution kind {kind!r}")
        self.kind = kind
        self.form = form
        self.symmetry = symmetry
        self._form_inv = None
        if kind == "form_adjoint":
            if form is None:
                raise ValueError("form_adjoint needs a form matrix")
            want = form.transpose() if symmetry == "symmetric" else -form.transpose()
            if want != form:
                raise ValueError(f"form is not {symmetry}")
            self._form_inv = form.inverse()

    def apply(self, x):
        if self.kind == "transpose":
            return x.transpose()
        return self._form_inv @ x.transpose() @ self.form

    def embed(self, ring):
        if self.kind == "transpose":
            return self
        return Involution("form_adjoint", self.form.embed(ring), self.symmetry)

    def __eq__(self, other):
        return (isinstance(other, Involution) and self.kind == other.kind
                and self.form == other.form and self.symmetry == other.symmetry)

    def __repr__(self):
        if self.kind == "transpose":
            return "Involution(transpose)"
        return f"Involution(form_adjoint, {self.symmetry})"


def involution_apply(iota, x):
    return iota.apply(x)


def herm_split(iota, x):
    """(h, a) with h* = h, a* = -a, h + a = x."""
    half = x.ring.half()
    xs = iota.apply(x)
    return (x + xs).scale(half), (x - xs).scale(half)


class LinearOperator:
    """A linear map between coordinate spaces, stored densely.

    Columns are images of basis vectors; composition is matrix product.
    """

    __slots__ = ("mat",)

    def __init__(self, mat):
        self.mat = mat

    @classmethod
    def identity(cls, ring, dim):
        return cls(Matrix.identity(ring, dim))

    @property
    def dim_out(self):
        return self.mat.nrows

    @property
    def dim_in(self):
        return self.mat.ncols

    @property
    def ring(self):
        return self.mat.ring

    def apply_flat(self, flat):
        return K.matvec(self.mat.rows, list(flat), self.ring)

    def compose(self, other):
        """self after other."""
        return LinearOperator(self.mat @ other.mat)

    def __add__(self, other):
        return LinearOperator(self.mat + other.mat)

    def __sub__(self, other):
        return LinearOperator(self.mat - other.mat)

    def scale(self, s):
        return LinearOperator(self.mat.scale(s))

    def is_invertible(self):
        return self.mat.is_invertible()

    def inverse(self):
        try:
            return LinearOperator(self.mat.inverse())
        except NotInvertible as e:
            raise SingularOperator(str(e)) from e

    def solve_flat(self, flat):
        col = Matrix(self.ring, [[x] for x in flat])
        return self.mat.solve(col).column(0)

    def __eq__(self, other):
        return isinstance(other, LinearOperator) and self.mat == other.mat

    def __repr__(self):
        return f"LinearOperator({self.dim_out}x{self.dim_in})"


def matrix_unit_basis(ring, n):
    """E_ij of M_n(K), row-major."""
    return [Matrix.unit(ring, n, i, j) for i in range(n) for j in range(n)]


def op_from_action(f, basis, ring):
    """Materialize a linear map by applying it to a basis of its domain.

    `f` maps Matrix -> Matrix; the result's columns are the flattened
    images, so apply_flat works on row-major coordinates.
    """
    cols = [f(b).flatten() for b in basis]
    dim_out = len(cols[0]) if cols else 0
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(dim_out)]
    return LinearOperator(Matrix(ring, rows))


def op_apply(op, x):
    """Apply an operator materialized on the full matrix-unit basis."""
    flat = op.apply_flat(x.flatten())
    return unflatten(x.ring, x.nrows, x.ncols, flat)


def op_solve(op, y):
    """z with op(z) = y, both reshaped as square algebra elements."""
    flat = op.solve_flat(y.flatten())
    return unflatten(y.ring, y.nrows, y.ncols, flat)


class CoordinateBasis:
    """A K-subspace of M_n(K) with membership test and coordinates.

    Built from an explicit basis; coordinates are read off through a
    precomputed left inverse on pivot rows, then membership is the check
    that the reconstruction reproduces the element.
    """

    __slots__ = ("ring", "n", "basis", "_cols", "_pivot_rows", "_left_inv",
                 "_standard", "_full")

    def __init__(self, ring, n, basis):
        self.ring = ring
        self.n = n
        self.basis = list(basis)
        d = len(self.basis)
        cols = Matrix._new(ring, [[self.basis[j].flatten()[i] for j in range(d)]
                                  for i in range(n * n)])
        self._cols = cols
        piv = K.pivot_columns(cols.transpose().rows, ring)
        if len(piv) != d:
            raise ValueError("basis is not independent")
        self._pivot_rows = piv
        sub = cols.submatrix(piv, range(d))
        self._left_inv = sub.inverse()
        self._full = d == n * n
        self._standard = self._full and cols == Matrix.identity(ring, d)

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, x):
        if x.ring != self.ring or x.shape != (self.n, self.n):
            raise RingMismatch("element does not match the subspace ambient")
        flat = x.flatten()
        if self._standard:
            return flat
        c = K.matvec(self._left_inv.rows,
                     [flat[i] for i in self._pivot_rows], self.ring)
        if not self._full and not self._contains_given(flat, c):
            raise NotInSubspace("element is outside the subspace")
        return c

    def _contains_given(self, flat, c):
        recon = K.matvec(self._cols.rows, c, self.ring)
        diff = [a - b for a, b in zip(recon, flat)]
        if self.ring.is_exact():
            z = self.ring.zero()
            return all(x == z for x in diff)
        return all(abs(x) <= 1e-9 for x in diff)

    def contains(self, x):
        try:
            self.coords(x)
            return True
        except NotInSubspace:
            return False

    def from_coords(self, c):
        if self._standard:
            return unflatten(self.ring, self.n, self.n, c)
        flat = K.matvec(self._cols.rows, list(c), self.ring)
        return unflatten(self.ring, self.n, self.n, flat)

    def materialize(self, f):
        """Operator matrix of a linear self-map of the subspace."""
        d = self.dim
        cols = [self.coords(f(b)) for b in self.basis]
        rows = [[cols[j][i] for j in range(d)] for i in range(d)]
        return LinearOperator(Matrix(self.ring, rows))

    def embed(self, ring):
        return CoordinateBasis(ring, self.n, [b.embed(ring) for b in self.basis])

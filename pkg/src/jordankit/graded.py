"""The 3-graded Lie algebra gl_2(A) and the elementary group acting on it.

Elements of gl_2(A) are 2n x 2n matrices over K, graded by block
position: upper-right = degree +1, diagonal = degree 0, lower-left =
degree -1. Group elements are invertible 2n x 2n matrices acting by
conjugation; an optional word of elementary generators witnesses
membership in the subgroup they generate.
"""

from __future__ import annotations

from .algebra import LinearOperator, Matrix, matrix_unit_basis, op_solve
from .errors import NotInChart, NotInvertible, RingMismatch, ShapeMismatch


def hat(x):
    """Embed x in degree +1: (0 x; 0 0)."""
    n = x.nrows
    z = Matrix.zeros(x.ring, n)
    return z.hstack(x).vstack(z.hstack(z))


def check(y):
    """Embed y in degree -1: (0 0; y 0)."""
    n = y.nrows
    z = Matrix.zeros(y.ring, n)
    return z.hstack(z).vstack(y.hstack(z))


def diag_embed(a, d):
    z = Matrix.zeros(a.ring, a.nrows)
    return a.hstack(z).vstack(z.hstack(d))


def blocks(X, n):
    """(a, b, c, d) blocks of a 2n x 2n matrix."""
    rows = range(n)
    rows2 = range(n, 2 * n)
    return (X.submatrix(rows, rows), X.submatrix(rows, rows2),
            X.submatrix(rows2, rows), X.submatrix(rows2, rows2))


def pr1(X, n):
    return X.submatrix(range(n), range(n, 2 * n))


def pr0(X, n):
    a, _, _, d = blocks(X, n)
    return (a, d)


def prm1(X, n):
    return X.submatrix(range(n, 2 * n), range(n))


def euler(ring, n):
    """E = (1/2) diag(1, -1); ad(E) acts as the degree."""
    h = ring.half()
    one = Matrix.identity(ring, n)
    return diag_embed(one.scale(h), one.scale(-h))


def ad_bracket(X, Y):
    """[X, Y] = XY - YX in gl_2(A)."""
    return X @ Y - Y @ X


def gl2_basis(ring, n):
    """Matrix units of M_2n(K), row-major: a basis of gl_2(A) over K."""
    return matrix_unit_basis(ring, 2 * n)


_DEGREE_DIMS = {1: lambda n: n * n, 0: lambda n: 2 * n * n, -1: lambda n: n * n}


def degree_basis(ring, n, degree):
    units = matrix_unit_basis(ring, n)
    if degree == 1:
        return [hat(u) for u in units]
    if degree == -1:
        return [check(u) for u in units]
    if degree == 0:
        z = Matrix.zeros(ring, n)
        return [diag_embed(u, z) for u in units] + [diag_embed(z, u) for u in units]
    raise ValueError(f"degree {degree} not in the grading")


def degree_component(X, n, degree):
    """Flattened coordinates of the degree component of X."""
    if degree == 1:
        return pr1(X, n).flatten()
    if degree == -1:
        return prm1(X, n).flatten()
    a, d = pr0(X, n)
    return a.flatten() + d.flatten()


class GroupElement:
    """Invertible 2 x 2 block matrix over A = M_n(K), acting on gl_2(A)
    by conjugation and on the projective line by fractional maps."""

    __slots__ = ("n", "ring", "mat", "word", "_inv_mat")

    def __init__(self, n, ring, mat, word=None):
        if mat.shape != (2 * n, 2 * n):
            raise ShapeMismatch("group element must be 2n x 2n")
        self.n = n
        self.ring = ring
        self.mat = mat
        self.word = tuple(word) if word is not None else None
        self._inv_mat = None

    # -- constructors --

    @classmethod
    def identity(cls, ring, n):
        return cls(n, ring, Matrix.identity(ring, 2 * n), word=())

    @classmethod
    def from_blocks(cls, a, b, c, d, word=None):
        return cls(a.nrows, a.ring, a.hstack(b).vstack(c.hstack(d)), word=word)

    @classmethod
    def exp_ad(cls, v, degree):
        """(1 v; 0 1) for degree +1, (1 0; v 1) for degree -1."""
        if degree not in (1, -1):
            raise ValueError("degree must be +1 or -1")
        n, ring = v.nrows, v.ring
        one = Matrix.identity(ring, n)
        z = Matrix.zeros(ring, n)
        if degree == 1:
            return cls.from_blocks(one, v, z, one, word=((1, v),))
        return cls.from_blocks(one, z, v, one, word=((-1, v),))

    @classmethod
    def cayley(cls, ring, n):
        one = Matrix.identity(ring, n)
        return cls.from_blocks(one, one, one, -one)

    @classmethod
    def swap(cls, ring, n):
        one = Matrix.identity(ring, n)
        z = Matrix.zeros(ring, n)
        return cls.from_blocks(z, one, one, z)

    @classmethod
    def jmat(cls, ring, n):
        """(0 1; -1 0), with its elementary factorization as word."""
        one = Matrix.identity(ring, n)
        word = ((1, one), (-1, -one), (1, one))
        z = Matrix.zeros(ring, n)
        return cls(n, ring, z.hstack(one).vstack((-one).hstack(z)), word=word)

    @classmethod
    def i11(cls, ring, n):
        one = Matrix.identity(ring, n)
        z = Matrix.zeros(ring, n)
        return cls.from_blocks(one, z, z, -one)

    @classmethod
    def from_word(cls, ring, n, word):
        g = cls.identity(ring, n)
        for deg, v in word:
            g = g @ cls.exp_ad(v, deg)
        return g

    # -- group structure --

    def __matmul__(self, other):
        if self.ring != other.ring or self.n != other.n:
            raise RingMismatch("group elements over different algebras")
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return GroupElement(self.n, self.ring, self.mat @ other.mat, word=word)

    def inverse_mat(self):
        if self._inv_mat is None:
            try:
                self._inv_mat = self.mat.inverse()
            except NotInvertible as e:
                raise NotInvertible("group element is not invertible") from e
        return self._inv_mat

    def inverse(self):
        word = None
        if self.word is not None:
            word = tuple((deg, -v) for deg, v in reversed(self.word))
        g = GroupElement(self.n, self.ring, self.inverse_mat(), word=word)
        g._inv_mat = self.mat
        return g

    def blocks(self):
        return blocks(self.mat, self.n)

    def ad(self, X):
        """Ad(g)X = g X g^-1 on gl_2(A)."""
        return self.mat @ X @ self.inverse_mat()

    def embed(self, ring):
        word = None
        if self.word is not None:
            word = tuple((deg, v.embed(ring)) for deg, v in self.word)
        return GroupElement(self.n, ring, self.mat.embed(ring), word=word)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.n == other.n
                and self.ring == other.ring and self.mat == other.mat)

    def __repr__(self):
        return f"GroupElement(n={self.n}, {self.mat!r})"


def ad_operator(g):
    """Ad(g) materialized on the matrix-unit basis of gl_2(A)."""
    ring, n = g.ring, g.n
    gi = g.inverse_mat()
    cols = [(g.mat @ b @ gi).flatten() for b in gl2_basis(ring, n)]
    d = len(cols)
    return LinearOperator(Matrix(ring, [[cols[j][i] for j in range(d)]
                                        for i in range(d)]))


def ad_element_operator(X):
    """ad(X) = [X, .] materialized on the matrix-unit basis of gl_2(A)."""
    ring = X.ring
    m = X.nrows
    basis = matrix_unit_basis(ring, m)
    cols = [(X @ b - b @ X).flatten() for b in basis]
    d = len(cols)
    return LinearOperator(Matrix(ring, [[cols[j][i] for j in range(d)]
                                        for i in range(d)]))


def grading_block(g, i, j):
    """Component of Ad(g) mapping the degree-j piece to the degree-i piece."""
    ring, n = g.ring, g.n
    gi = g.inverse_mat()
    cols = [degree_component(g.mat @ b @ gi, n, i) for b in degree_basis(ring, n, j)]
    rows = len(cols[0])
    return LinearOperator(Matrix(ring, [[cols[c][r] for c in range(len(cols))]
                                        for r in range(rows)]))


def denominators(g, x):
    """(d, c, n) for the chart action of g at x.

    d is the degree-(1,1) block of Ad((g u)^-1), c the degree-(-1,-1)
    block of Ad(g u), and n the degree-1 part of Ad((g u)^-1) applied to
    the Euler element, where u = exp_ad(x, +1).
    """
    ring, n = g.ring, g.n
    h = g @ GroupElement.exp_ad(x, 1)
    hm = h.mat
    hi = h.inverse_mat()
    units = matrix_unit_basis(ring, n)
    dcols = [pr1(hi @ hat(u) @ hm, n).flatten() for u in units]
    ccols = [prm1(hm @ check(u) @ hi, n).flatten() for u in units]
    dim = n * n
    dop = LinearOperator(Matrix(ring, [[dcols[j][i] for j in range(dim)]
                                       for i in range(dim)]))
    cop = LinearOperator(Matrix(ring, [[ccols[j][i] for j in range(dim)]
                                       for i in range(dim)]))
    nval = pr1(hi @ euler(ring, n) @ hm, n)
    return dop, cop, nval


def act(g, x):
    """Chart action g.x = d^-1(n); defined iff both d and c are invertible."""
    dop, cop, nval = denominators(g, x)
    if not (dop.is_invertible() and cop.is_invertible()):
        raise NotInChart("image left the affine chart")
    return op_solve(dop, nval)


def in_chart(g, x):
    dop, cop, _ = denominators(g, x)
    return dop.is_invertible() and cop.is_invertible()

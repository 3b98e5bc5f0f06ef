"""Jordan-algebraic core on A = M_n(K) and its (anti-)hermitian parts:
products, the multiplication and quadratic representations, inverses,
triple products, Bergman operators and quasi-inverses.

Convention: the triple product is T(x,y,z) = xyz + zyx (the double
bracket [[x^,y^],z^] in gl_2), the Bergman operator is
id + ad(x^)ad(y^) + (1/4)ad(x^)^2 ad(y^)^2, which closes to
z -> (1+xy)z(1+yx), and the quasi-inverse is B(x,y)^-1 (x + Q(x)y)
= x(1+yx)^-1. The opposite ("loos") sign convention is reachable through
loos_bergman / loos_quasi_inverse, which negate the second slot.
"""

from __future__ import annotations

from .algebra import (CoordinateBasis, Matrix, alg_invert, herm_split,
                      matrix_unit_basis)
from .errors import (NotInSubspace, NotInvertible, NotQuasiInvertible,
                     SingularOperator)
from .graded import ad_bracket, check, hat, pr1

FLAVORS = ("full", "hermitian", "antihermitian")


class JordanContext:
    """Ambient subspace V of A = M_n(K): all of A, Herm(A, iota) or
    Aherm(A, iota), with a fixed coordinate basis."""

    __slots__ = ("n", "ring", "flavor", "involution", "space")

    def __init__(self, n, ring, flavor="full", involution=None, _space=None):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        if flavor != "full" and involution is None:
            raise ValueError(f"flavor {flavor!r} needs an involution")
        self.n = n
        self.ring = ring
        self.flavor = flavor
        self.involution = involution
        self.space = _space if _space is not None else self._build_space()

    def _build_space(self):
        units = matrix_unit_basis(self.ring, self.n)
        if self.flavor == "full":
            return CoordinateBasis(self.ring, self.n, units)
        idx = 0 if self.flavor == "hermitian" else 1
        candidates = [herm_split(self.involution, u)[idx] for u in units]
        basis = []
        probe = []
        from . import _kernels as K
        for cand in candidates:
            if cand.is_zero():
                continue
            trial = probe + [list(cand.flatten())]
            if len(K.pivot_columns(trial, self.ring)) == len(trial):
                basis.append(cand)
                probe = trial
        return CoordinateBasis(self.ring, self.n, basis)

    @property
    def dim(self):
        return self.space.dim

    def contains(self, x):
        if self.flavor == "full":
            return x.shape == (self.n, self.n) and x.ring == self.ring
        return self.space.contains(x)

    def require(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise NotInSubspace(f"element not in {self.flavor} subspace")

    def unit(self):
        return Matrix.identity(self.ring, self.n)

    def zero(self):
        return Matrix.zeros(self.ring, self.n)

    def at_ring(self, ring):
        """The same context with all data embedded into a dual extension."""
        if ring == self.ring:
            return self
        inv = self.involution.embed(ring) if self.involution else None
        return JordanContext(self.n, ring, self.flavor, inv,
                             _space=self.space.embed(ring))

    def __repr__(self):
        return f"JordanContext(n={self.n}, {self.ring!r}, {self.flavor})"


def jordan_product(ctx, x, y):
    """x o y = (xy + yx)/2; only the product-closed flavors."""
    if ctx.flavor == "antihermitian":
        raise NotInSubspace("antihermitian part is not product-closed")
    ctx.require(x, y)
    return (x @ y + y @ x).scale(ctx.ring.half())


def mult_operator(ctx, x):
    """L(x): w -> x o w on V."""
    if ctx.flavor == "antihermitian":
        raise NotInSubspace("antihermitian part is not product-closed")
    ctx.require(x)
    half = ctx.ring.half()
    return ctx.space.materialize(lambda w: (x @ w + w @ x).scale(half))


def rep_operators(ctx, x, y=None):
    """(L(x), Q(x)) and, when y is given, the polarized Q(x,y), as
    operators on the context's coordinate space; Q = 2 L(x)^2 - L(x o x)."""
    lx = mult_operator(ctx, x)
    lxx = mult_operator(ctx, jordan_product(ctx, x, x))
    two = ctx.ring.from_int(2)
    qx = lx.compose(lx).scale(two) - lxx
    if y is None:
        return lx, qx
    qxy = rep_operators(ctx, x + y)[1] - qx - rep_operators(ctx, y)[1]
    return lx, qx, qxy


def quad_triple_operator(ctx, x):
    """The quadratic operator of the triple system, w -> x w x; defined
    for every flavor (it is (1/2)T(x, ., x))."""
    ctx.require(x)
    return ctx.space.materialize(lambda w: x @ w @ x)


def jordan_inverse(ctx, x):
    """x^-1 = Q(x)^-1 x; requires a unital (full or hermitian) flavor."""
    _, qx = rep_operators(ctx, x)
    try:
        c = qx.solve_flat(ctx.space.coords(x))
    except SingularOperator as e:
        raise NotInvertible("quadratic representation is singular") from e
    return ctx.space.from_coords(c)


def is_jordan_invertible(ctx, x):
    if not ctx.contains(x):
        return False
    return rep_operators(ctx, x)[1].is_invertible()


def triple_product(ctx, x, y, z):
    """T(x,y,z) = xyz + zyx."""
    ctx.require(x, y, z)
    return x @ y @ z + z @ y @ x


def bergman_operator(ctx, x, y):
    """id + ad(x^)ad(y^) + (1/4) ad(x^)^2 ad(y^)^2, evaluated literally in
    gl_2(A) and restricted to the degree-1 piece, as an operator on V."""
    ctx.require(x, y)
    n = ctx.n
    xh = hat(x)
    yc = check(y)
    quarter = ctx.ring.invert(ctx.ring.from_int(4))

    def action(w):
        wh = hat(w)
        t1 = pr1(ad_bracket(xh, ad_bracket(yc, wh)), n)
        y2w = ad_bracket(yc, ad_bracket(yc, wh))
        t2 = pr1(ad_bracket(xh, ad_bracket(xh, y2w)), n)
        return w + t1 + t2.scale(quarter)

    return ctx.space.materialize(action)


def bergman_closed(ctx, x, y):
    """Closed associative form z -> (1+xy)z(1+yx); the oracle twin of
    bergman_operator."""
    ctx.require(x, y)
    one = ctx.unit()
    a = one + x @ y
    b = one + y @ x
    return ctx.space.materialize(lambda w: a @ w @ b)


def is_quasi_invertible(ctx, x, y):
    """Both B(x,y) and B(y,x) invertible."""
    if not (ctx.contains(x) and ctx.contains(y)):
        return False
    return (bergman_operator(ctx, x, y).is_invertible()
            and bergman_operator(ctx, y, x).is_invertible())


def quasi_inverse(ctx, x, y):
    """B(x,y)^-1 (x + Q(x)y); equals x(1+yx)^-1 in the full case and the
    chart action of (1 0; y 1)."""
    b = bergman_operator(ctx, x, y)
    if not (b.is_invertible() and bergman_operator(ctx, y, x).is_invertible()):
        raise NotQuasiInvertible("Bergman operator is singular")
    nom = x + x @ y @ x
    return ctx.space.from_coords(b.solve_flat(ctx.space.coords(nom)))


def loos_bergman(ctx, x, w):
    """Bergman operator in the opposite sign convention."""
    return bergman_operator(ctx, x, -w)


def loos_quasi_inverse(ctx, x, w):
    """Quasi-inverse in the opposite sign convention: x(1-wx)^-1."""
    return quasi_inverse(ctx, x, -w)


def full_quasi_inverse_oracle(ctx, x, y):
    """x(1+yx)^-1 computed directly in A; full flavor oracle."""
    return x @ alg_invert(ctx.unit() + y @ x)

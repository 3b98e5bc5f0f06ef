"""Jordan products, representations, inverses, Bergman operators and
quasi-inverses, with the associative oracles."""

import pytest

from jordankit.algebra import Involution, Matrix, alg_invert
from jordankit.errors import (NotInSubspace, NotInvertible,
                              NotQuasiInvertible)
from jordankit.jordan import (JordanContext, bergman_closed,
                              bergman_operator, full_quasi_inverse_oracle,
                              is_quasi_invertible, jordan_inverse,
                              jordan_product, loos_bergman,
                              loos_quasi_inverse, quad_triple_operator,
                              quasi_inverse, rep_operators, triple_product)
from jordankit.randgen import rand_in_context, rand_matrix, trial_rng
from jordankit.rings import RATIONAL

Q = RATIONAL


def mat(rows):
    return Matrix.from_ints(Q, rows)


@pytest.fixture
def full2():
    return JordanContext(2, Q, "full")


@pytest.fixture
def herm2():
    return JordanContext(2, Q, "hermitian", Involution())


@pytest.fixture
def aherm2():
    return JordanContext(2, Q, "antihermitian", Involution())


def test_subspace_dimensions(full2, herm2, aherm2):
    assert full2.dim == 4
    assert herm2.dim == 3
    assert aherm2.dim == 1


def test_product_examples(full2):
    x = mat([[1, 2], [3, 4]])
    assert jordan_product(full2, x, full2.unit()) == x
    assert jordan_product(full2, mat([[1, 0], [0, 2]]), mat([[3, 0], [0, 4]])) \
        == mat([[3, 0], [0, 8]])
    e12 = Matrix.unit(Q, 2, 0, 1)
    e21 = Matrix.unit(Q, 2, 1, 0)
    assert jordan_product(full2, e12, e21) == Matrix.identity(Q, 2).scale(Q.half())


def test_product_needs_closed_flavor(aherm2):
    v = rand_in_context(trial_rng(5, 0), aherm2)
    with pytest.raises(NotInSubspace):
        jordan_product(aherm2, v, v)
    with pytest.raises(NotInSubspace):
        rep_operators(aherm2, v)


def test_hermitian_membership_enforced(herm2):
    with pytest.raises(NotInSubspace):
        jordan_product(herm2, mat([[0, 1], [0, 0]]), herm2.unit())


def test_rep_operator_examples(full2):
    _, q1 = rep_operators(full2, full2.unit())
    assert q1.mat == Matrix.identity(Q, 4)
    x = mat([[0, 1], [1, 0]])
    y = mat([[1, 0], [0, 2]])
    _, qx = rep_operators(full2, x)
    assert full2.space.from_coords(qx.apply_flat(full2.space.coords(y))) \
        == mat([[2, 0], [0, 1]])  # oracle: x y x
    _, qx2, qxx = rep_operators(full2, x, x)
    assert qxx == qx2.scale(Q.from_int(2))


def test_quad_triple_operator_all_flavors(aherm2):
    v = rand_in_context(trial_rng(6, 0), aherm2)
    w = rand_in_context(trial_rng(6, 1), aherm2)
    got = aherm2.space.from_coords(
        quad_triple_operator(aherm2, v).apply_flat(aherm2.space.coords(w)))
    assert got == v @ w @ v


def test_jordan_inverse_examples(herm2, full2):
    x = mat([[2, 0], [0, 3]])
    xi = jordan_inverse(herm2, x)
    assert xi == Matrix(Q, [[Q.half(), Q.zero()],
                            [Q.zero(), Q.invert(Q.from_int(3))]])
    assert jordan_inverse(full2, full2.unit()) == full2.unit()
    with pytest.raises(NotInvertible):
        jordan_inverse(full2, Matrix.unit(Q, 2, 0, 1))


def test_jordan_inverse_matches_algebra_inverse(full2):
    rng = trial_rng(7, 0)
    for _ in range(30):
        x = rand_matrix(rng, Q, 2)
        if not x.is_invertible():
            continue
        assert jordan_inverse(full2, x) == alg_invert(x)


def test_triple_examples(full2):
    one = full2.unit()
    assert triple_product(full2, one, one, one) == one.scale(Q.from_int(2))
    e12 = Matrix.unit(Q, 2, 0, 1)
    e21 = Matrix.unit(Q, 2, 1, 0)
    assert triple_product(full2, e12, e21, e12) == e12.scale(Q.from_int(2))
    rng = trial_rng(8, 0)
    for _ in range(20):
        x, y, z = (rand_matrix(rng, Q, 2) for _ in range(3))
        assert triple_product(full2, x, y, z) == triple_product(full2, z, y, x)


def scalar_ctx():
    return JordanContext(1, Q, "full")


def test_bergman_scalar_examples():
    ctx = scalar_ctx()
    one = ctx.unit()
    b = bergman_operator(ctx, one, one)
    assert b.mat == Matrix.from_ints(Q, [[4]])
    b = bergman_operator(ctx, one, one.scale(Q.from_int(-2)))
    assert b.mat == Matrix.from_ints(Q, [[1]])
    y = one.scale(Q.from_int(5))
    assert bergman_operator(ctx, one.scale(Q.zero()), y).mat \
        == Matrix.identity(Q, 1)


def test_bergman_ad_equals_closed(full2, herm2):
    rng = trial_rng(9, 0)
    for ctx in (full2, herm2):
        for _ in range(25):
            x = rand_in_context(rng, ctx)
            y = rand_in_context(rng, ctx)
            assert bergman_operator(ctx, x, y) == bergman_closed(ctx, x, y)


def test_quasi_invertibility_examples(full2):
    ctx = scalar_ctx()
    one = ctx.unit()
    assert is_quasi_invertible(ctx, one.scale(Q.zero()), one.scale(Q.from_int(3)))
    assert not is_quasi_invertible(ctx, one, -one)
    e12 = Matrix.unit(Q, 2, 0, 1)
    e21 = Matrix.unit(Q, 2, 1, 0)
    assert is_quasi_invertible(full2, e12, e21)


def test_quasi_inverse_examples(full2):
    ctx = scalar_ctx()
    one = ctx.unit()
    assert quasi_inverse(ctx, one, one) == one.scale(Q.half())
    with pytest.raises(NotQuasiInvertible):
        quasi_inverse(ctx, one, -one)
    x = rand_matrix(trial_rng(10, 0), Q, 2)
    assert quasi_inverse(full2, x, Matrix.zeros(Q, 2)) == x


def test_quasi_inverse_oracle(full2):
    rng = trial_rng(11, 0)
    hits = 0
    while hits < 25:
        x = rand_matrix(rng, Q, 2)
        y = rand_matrix(rng, Q, 2)
        if not is_quasi_invertible(full2, x, y):
            continue
        hits += 1
        assert quasi_inverse(full2, x, y) == full_quasi_inverse_oracle(full2, x, y)


def test_quasi_inverse_stays_hermitian(herm2):
    rng = trial_rng(12, 0)
    hits = 0
    while hits < 15:
        x = rand_in_context(rng, herm2)
        y = rand_in_context(rng, herm2)
        if not is_quasi_invertible(herm2, x, y):
            continue
        hits += 1
        assert herm2.contains(quasi_inverse(herm2, x, y))


def test_loos_convention_round_trip(full2):
    rng = trial_rng(13, 0)
    hits = 0
    while hits < 20:
        x = rand_matrix(rng, Q, 2)
        w = rand_matrix(rng, Q, 2)
        if not is_quasi_invertible(full2, x, -w):
            continue
        hits += 1
        assert loos_quasi_inverse(full2, x, w) == quasi_inverse(full2, x, -w)
        assert loos_bergman(full2, x, w) == bergman_operator(full2, x, -w)
        # closed Loos form: x (1 - w x)^-1
        assert loos_quasi_inverse(full2, x, w) \
            == x @ alg_invert(full2.unit() - w @ x)


def test_symplectic_involution_flavors():
    """With the skew-form adjoint on M_2 (x* = adjugate), the hermitian
    part is the scalars and the anti-hermitian part is trace-zero."""
    b = mat([[0, 1], [-1, 0]])
    iota = Involution("form_adjoint", b, "skew")
    herm = JordanContext(2, Q, "hermitian", iota)
    aherm = JordanContext(2, Q, "antihermitian", iota)
    assert herm.dim == 1 and aherm.dim == 3
    assert herm.contains(Matrix.identity(Q, 2).scale(Q.from_int(3)))
    assert aherm.contains(mat([[1, 2], [3, -1]]))
    assert not aherm.contains(Matrix.identity(Q, 2))
    rng = trial_rng(15, 0)
    for _ in range(15):
        x = rand_in_context(rng, aherm)
        y = rand_in_context(rng, aherm)
        z = rand_in_context(rng, aherm)
        assert aherm.contains(triple_product(aherm, x, y, z))
        assert bergman_operator(aherm, x, y) == bergman_closed(aherm, x, y)


def test_fundamental_formula_small(full2):
    rng = trial_rng(14, 0)
    for _ in range(25):
        x = rand_in_context(rng, full2)
        y = rand_in_context(rng, full2)
        _, qx = rep_operators(full2, x)
        _, qy = rep_operators(full2, y)
        qxy = full2.space.from_coords(qx.apply_flat(full2.space.coords(y)))
        _, lhs = rep_operators(full2, qxy)
        assert lhs == qx.compose(qy).compose(qx)

"""
Tests for exact linear algebra.
"""
from fractions import Fraction

import pytest

from src.domain.scalars.fields import QuadElement, prime_field, quad_ext, rationals
from src.domain.scalars.linalg import (
    determinant,
    diagonal,
    express_in_basis,
    identity,
    inverse,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    scalar_of,
    solve,
    to_matrix,
)
from src.shared.exceptions import PreconditionError


def test_determinant_and_inverse():
    """det and inverse over Q."""
    ctx = rationals()
    m = to_matrix(ctx, [[2, 1], [7, 4]])
    assert determinant(ctx, m) == 1
    assert mat_mul(m, inverse(ctx, m)) == identity(ctx, 2)
    with pytest.raises(PreconditionError):
        inverse(ctx, to_matrix(ctx, [[1, 2], [2, 4]]))


def test_determinant_with_row_swap():
    """A leading zero forces a swap and a sign change."""
    ctx = rationals()
    assert determinant(ctx, to_matrix(ctx, [[0, 1], [1, 0]])) == -1


def test_nullspace_and_rank():
    """A rank-2 3x3 matrix has a one-dimensional kernel."""
    ctx = rationals()
    m = to_matrix(ctx, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert rank(ctx, m) == 2
    (kernel,) = nullspace(ctx, m)
    assert mat_vec(m, kernel) == [0, 0, 0]


def test_solve_consistent_and_inconsistent():
    """solve returns a solution or None."""
    ctx = rationals()
    m = to_matrix(ctx, [[1, 1], [1, -1]])
    assert solve(ctx, m, [ctx.coerce(3), ctx.coerce(1)]) == [2, 1]
    singular = to_matrix(ctx, [[1, 1], [2, 2]])
    assert solve(ctx, singular, [ctx.coerce(1), ctx.coerce(3)]) is None


def test_express_in_basis():
    """Coordinates in a basis and None outside the span."""
    ctx = rationals()
    basis = [to_matrix(ctx, [[1, 0, 1]])[0], to_matrix(ctx, [[0, 1, 1]])[0]]
    target = to_matrix(ctx, [[2, 3, 5]])[0]
    assert express_in_basis(ctx, basis, target) == [2, 3]
    assert express_in_basis(ctx, basis, to_matrix(ctx, [[0, 0, 1]])[0]) is None


def test_scalar_of():
    """Recognize scalar matrices."""
    ctx = prime_field(5)
    assert scalar_of(diagonal(ctx, [3, 3, 3])) == 3
    assert scalar_of(diagonal(ctx, [3, 3, 1])) is None
    assert scalar_of(diagonal(rationals(), [Fraction(1, 2)] * 2)) == Fraction(1, 2)


def cofactor_det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


FIELDS = [rationals(), prime_field(7), quad_ext(-1), quad_ext(-4), quad_ext(Fraction(1, 2)), quad_ext(5)]


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda ctx: ctx.label)
def test_elimination_agrees_with_field_arithmetic(ctx):
    """Determinant, inverse and kernel come back as scalars of the same field."""
    w = QuadElement(1, 1, ctx.d) if ctx.d is not None else ctx.coerce(3)
    m = [
        [ctx.coerce(2), w, ctx.coerce(1)],
        [ctx.coerce(0), ctx.coerce(1), w],
        [w, ctx.coerce(Fraction(1, 3)), ctx.coerce(5)],
    ]
    det = determinant(ctx, m)
    assert det == cofactor_det3(m)
    if det != 0:
        assert mat_mul(m, inverse(ctx, m)) == identity(ctx, 3)
    singular = [m[0], m[1], [x + y for x, y in zip(m[0], m[1])]]
    assert rank(ctx, singular) == 2
    (kernel,) = nullspace(ctx, singular)
    assert any(x != 0 for x in kernel)
    assert mat_vec(singular, kernel) == [0, 0, 0]
    rhs = mat_vec(m, [ctx.coerce(1), w, ctx.coerce(-2)])
    x = solve(ctx, m, rhs)
    assert x is not None and mat_vec(m, x) == rhs


def test_quadratic_scalars_survive_the_round_trip():
    """a + b sqrt(d) keeps its coordinates when d is not squarefree."""
    ctx = quad_ext(-4)
    m = [[QuadElement(Fraction(1, 2), 3, -4)]]
    (row,) = inverse(ctx, inverse(ctx, m))
    assert row[0] == QuadElement(Fraction(1, 2), 3, -4)
    assert determinant(ctx, [[QuadElement(0, 1, -4), 0], [0, QuadElement(0, 1, -4)]]) == -4

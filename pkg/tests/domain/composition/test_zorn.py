"""
Tests for the Zorn vector-matrix model of the split octonions.
"""
import random

import pytest

from src.domain.composition.zorn import ZornAlgebra, zorn_mul, zorn_norm_form, zorn_ops
from src.domain.qforms.forms import hyperbolic, qform_equivalent
from src.domain.scalars.fields import prime_field, rationals
from src.shared.exceptions import ContextMismatchError, PreconditionError


@pytest.mark.parametrize("ctx", [rationals(), prime_field(5)])
def test_norm_is_multiplicative(ctx):
    algebra = ZornAlgebra(ctx=ctx)
    rng = random.Random(3)
    for _ in range(25):
        u, v = algebra.random_element(rng), algebra.random_element(rng)
        product, norm = zorn_ops(u, v)
        assert norm == u.norm()
        assert product.norm() == u.norm() * v.norm()


def test_conjugate_and_identity():
    algebra = ZornAlgebra(ctx=rationals())
    u = algebra.element([2, 1, 0, 3, -1, 4, 0, 5])
    assert u.norm() == 2 * 5 - (1 * -1 + 0 * 4 + 3 * 0)
    assert zorn_mul(u, u.conj()) == algebra.scalar(u.norm())
    assert zorn_mul(algebra.one(), u) == u
    assert zorn_mul(u, algebra.one()) == u
    assert u.trace() == 7


def test_isotropic_vectors_exist():
    """The split octonions contain zero divisors."""
    algebra = ZornAlgebra(ctx=rationals())
    e = algebra.element([1, 0, 0, 0, 0, 0, 0, 0])
    f = algebra.element([0, 0, 0, 0, 0, 0, 0, 1])
    assert e.norm() == 0
    assert zorn_mul(e, f) == algebra.zero()


def test_norm_form_is_hyperbolic():
    ctx = rationals()
    assert qform_equivalent(zorn_norm_form(ctx), hyperbolic(ctx, 4))
    assert ZornAlgebra(ctx=ctx).label == "Zorn(Q)"


def test_shape_and_context_checks():
    with pytest.raises(PreconditionError):
        ZornAlgebra(ctx=rationals()).element([1, 2, 3])
    u = ZornAlgebra(ctx=rationals()).one()
    v = ZornAlgebra(ctx=prime_field(3)).one()
    with pytest.raises(ContextMismatchError):
        zorn_mul(u, v)

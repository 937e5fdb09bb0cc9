"""
Tests for Sp6 / GSp6 membership and the random word generators.
"""
import random

import pytest

from src.domain.scalars.fields import prime_field, rationals
from src.domain.scalars.linalg import diagonal, identity, matrices_equal, mat_mul
from src.domain.wedge.symplectic import (
    GroupKind,
    SymplecticSpace,
    check_symplectic,
    h_a,
    random_similitude,
    random_symplectic,
    sl2_pair_block,
    sl3_block,
)
from src.shared.exceptions import NotASimilitudeError, PreconditionError, ZeroInputError


def test_pairing_on_basis():
    space = SymplecticSpace(ctx=rationals())
    e1 = [1, 0, 0, 0, 0, 0]
    e4 = [0, 0, 0, 1, 0, 0]
    assert space.pairing(e1, e4) == 1
    assert space.pairing(e4, e1) == -1
    assert space.pairing(e1, e1) == 0


def test_identity_and_h_a():
    ctx = rationals()
    assert check_symplectic(ctx, identity(ctx, 6)).kind == GroupKind.SP6
    h = h_a(ctx, 3)
    assert h.similitude_factor == 3
    assert h.kind == GroupKind.GSP6
    with pytest.raises(ZeroInputError):
        h_a(ctx, 0)


def test_non_similitude_is_rejected():
    ctx = rationals()
    with pytest.raises(NotASimilitudeError):
        check_symplectic(ctx, diagonal(ctx, [2, 1, 1, 1, 1, 1]))
    with pytest.raises(PreconditionError):
        check_symplectic(ctx, identity(ctx, 3))


def test_block_generators():
    ctx = rationals()
    assert sl3_block(ctx, [[1, 2, 0], [0, 1, 0], [3, 0, 1]]).kind == GroupKind.SP6
    assert sl2_pair_block(ctx, [[2, 1], [1, 1]], m=2).similitude_factor == 1
    with pytest.raises(PreconditionError):
        sl2_pair_block(ctx, [[2, 0], [0, 1]])


@pytest.mark.parametrize("ctx", [rationals(), prime_field(7)])
def test_random_words_are_symplectic(ctx):
    rng = random.Random(2)
    g = random_symplectic(ctx, rng, 8)
    assert check_symplectic(ctx, g.g).similitude_factor == 1
    s = random_similitude(ctx, rng, 8)
    assert check_symplectic(ctx, s.g).similitude_factor == s.similitude_factor


def test_composition_and_inverse():
    ctx = rationals()
    rng = random.Random(9)
    g = random_similitude(ctx, rng, 6)
    product = g @ g.inverse()
    assert matrices_equal(product.g, identity(ctx, 6))
    assert product.kind == GroupKind.SP6
    assert matrices_equal((g @ h_a(ctx, 2)).g, mat_mul(g.g, h_a(ctx, 2).g))

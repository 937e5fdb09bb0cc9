"""
Tests for the relative invariants f1, f2 and semistability.
"""
import random

import pytest

from src.domain.invariants.relative import (
    f1_f2_semistable,
    f1_normal_form_polynomial,
    f1_value,
    f2_gram,
    f2_normal_form_polynomial,
    f2_value,
    mj_phi,
)
from src.domain.scalars.fields import prime_field, rationals
from src.domain.scalars.linalg import is_symmetric
from src.domain.wedge.contraction import act_product, act_wedge3, join_components, split_components
from src.domain.wedge.symplectic import h_a, random_symplectic
from src.domain.wedge.trivector import TriVector, parse_trivector


def normal_form(ctx, y0, y1, y2, y3):
    return TriVector.from_terms(
        ctx,
        {(1, 2, 3): -1, (4, 5, 6): -y0, (1, 5, 6): y1, (4, 2, 6): y2, (4, 5, 3): y3},
    )


def test_split_point_is_not_semistable():
    ctx = rationals()
    report = f1_f2_semistable(parse_trivector("e123 + e456", ctx))
    assert report.f == 1
    assert report.f1 == -ctx.one() / 4
    assert report.f2 == 0
    assert not report.semistable


@pytest.mark.parametrize("y", [(0, 1, 1, 1), (2, 1, -1, 3), (1, 2, 5, -1), (4, 1, 1, 5)])
def test_normal_form_polynomials(y):
    ctx = rationals()
    x = normal_form(ctx, *y)
    assert f1_value(x) == f1_normal_form_polynomial(ctx, y)
    v = [1, -2, 3, 1, 0, 2]
    assert f2_value(join_components(x, v)) == f2_normal_form_polynomial(ctx, y, v)


def test_f2_on_single_directions():
    ctx = rationals()
    x = normal_form(ctx, 3, 2, 5, 7)
    assert f2_value(join_components(x, [0, 0, 0, 1, 0, 0])) == -2
    assert f2_value(join_components(x, [1, 0, 0, 0, 0, 0])) == -35
    assert f2_value(join_components(x, [1, 0, 0, 1, 0, 0])) == -35 - 2 - 3


def test_semistable_normal_form():
    ctx = rationals()
    report = f1_f2_semistable(join_components(normal_form(ctx, 0, 1, 1, 1), [2, 0, 0, 0, 0, 0]))
    assert report.f1 == 1
    assert report.f2 == -4
    assert report.semistable


def test_gram_is_symmetric():
    ctx = rationals()
    rng = random.Random(6)
    x = TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])
    assert is_symmetric(f2_gram(x))


@pytest.mark.parametrize("ctx", [rationals(), prime_field(13)])
def test_mj_phi_is_symmetric_on_kernel(ctx):
    rng = random.Random(8)
    for _ in range(3):
        t = TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])
        x, _ = split_components(t)
        assert is_symmetric(mj_phi(x))


@pytest.mark.parametrize("ctx", [rationals(), prime_field(13)])
def test_f1_f2_are_sp6_invariant(ctx):
    rng = random.Random(17)
    for _ in range(3):
        t = TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])
        g = random_symplectic(ctx, rng, 6)
        before, after = f1_f2_semistable(t), f1_f2_semistable(act_wedge3(g, t))
        assert (after.f1, after.f2, after.semistable) == (before.f1, before.f2, before.semistable)


@pytest.mark.parametrize("ctx", [rationals(), prime_field(13)])
def test_gl1_pair_characters(ctx):
    """(g, a, b) scales f1 by a^4 and f2 by a^2 b^2."""
    rng = random.Random(23)
    for _ in range(3):
        t = TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])
        g = random_symplectic(ctx, rng, 4)
        a, b = ctx.random_scalar(rng, 4, nonzero=True), ctx.random_scalar(rng, 4, nonzero=True)
        before, after = f1_f2_semistable(t), f1_f2_semistable(act_product(g, a, b, t))
        assert after.f1 == a ** 4 * before.f1
        assert after.f2 == a ** 2 * b ** 2 * before.f2


@pytest.mark.parametrize("ctx", [rationals(), prime_field(13)])
def test_similitude_characters(ctx):
    """h_c scales f1 by c^6 and f2 by c^4 under the product action."""
    rng = random.Random(29)
    for c in (2, 3, -5):
        t = TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])
        c = ctx.coerce(c)
        before = f1_f2_semistable(t)
        after = f1_f2_semistable(act_product(h_a(ctx, c), 1, 1, t))
        assert after.f1 == c ** 6 * before.f1
        assert after.f2 == c ** 4 * before.f2

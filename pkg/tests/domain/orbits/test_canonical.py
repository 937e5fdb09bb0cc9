"""
Tests for the reduction of v at the split points.
"""
import pytest

from src.domain.orbits.canonical import canonicalize_v, hyperbolic_q
from src.domain.orbits.normal_form import split_x
from src.domain.scalars.fields import prime_field, rationals
from src.domain.wedge.contraction import act_wedge3, join_components
from src.shared.exceptions import NotSemistableError, ZeroInputError


def test_hyperbolic_q():
    assert hyperbolic_q([1, 2, 3, 4, 5, 6]) == 4 + 10 + 18


def test_generic_vector_reaches_canonical_point():
    ctx = rationals()
    result = canonicalize_v(ctx, 2, [1, 2, 3, 4, 5, 6])
    assert result.q == 32
    assert result.pivot == 1
    assert result.g.similitude_factor == 1
    assert result.canonical == join_components(split_x(ctx, 2), [32, 0, 0, 1, 0, 0])
    assert act_wedge3(result.g, result.source) == result.canonical


def test_pivot_swap():
    ctx = rationals()
    result = canonicalize_v(ctx, 5, [0, 3, 0, 0, 2, 1])
    assert result.pivot == 2
    assert result.q == 6
    assert result.steps[0].startswith("swap pair 2")


def test_finite_field_canonicalization():
    ctx = prime_field(7)
    result = canonicalize_v(ctx, 3, [0, 0, 2, 1, 1, 5])
    assert result.pivot == 3
    assert result.q == 3
    assert act_wedge3(result.g, result.source) == result.canonical


def test_degenerate_inputs():
    ctx = rationals()
    with pytest.raises(NotSemistableError):
        canonicalize_v(ctx, 2, [1, 0, 0, 0, 1, 0])
    with pytest.raises(ZeroInputError):
        canonicalize_v(ctx, 0, [1, 0, 0, 1, 0, 0])

"""
Tests for the normal-form family and the split points.
"""
import pytest

from src.domain.invariants.relative import f1_f2_semistable
from src.domain.orbits.normal_form import NormalFormX, normal_form_point, split_x
from src.domain.scalars.fields import rationals
from src.domain.wedge.trivector import parse_trivector
from src.shared.exceptions import PreconditionError, ZeroInputError


def test_x_part_and_f1():
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, [2, 1, 3, 5])
    assert nf.x_part() == parse_trivector("-e123 - 2*e456 + e156 + 3*e426 + 5*e453", ctx)
    assert nf.f1 == 15 - 1


def test_pattern_vectors():
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, [4, 1, 2, -1])
    assert nf.pattern_vector(1) == [2, 0, 0, -4, 0, 0]
    assert nf.pattern_vector(2) == [0, 2, 0, 0, -2, 0]
    assert nf.pattern_vector(3) == [0, 0, 2, 0, 0, 4]
    with pytest.raises(PreconditionError):
        nf.pattern_vector(4)


def test_pattern_points_are_semistable():
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, [0, 1, 1, 1])
    report = f1_f2_semistable(normal_form_point(nf, nf.pattern_vector(1)))
    assert report.f1 == 1
    assert report.f2 == -4
    assert report.semistable


def test_invalid_normal_forms():
    ctx = rationals()
    with pytest.raises(ZeroInputError):
        NormalFormX.from_values(ctx, [1, 0, 1, 1])
    with pytest.raises(PreconditionError):
        NormalFormX.from_values(ctx, [1, 1, 1])


def test_split_point():
    ctx = rationals()
    assert split_x(ctx, 3) == parse_trivector("-e123 - 3*e456", ctx)

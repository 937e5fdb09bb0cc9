"""
Tests for Lie stabilizers and the quaternion norm read off the Killing form.
"""
import random

import pytest

from src.domain.orbits.normal_form import NormalFormX, normal_form_point, split_x
from src.domain.orbits.stabilizer import (
    lie_stabilizer,
    lie_stabilizer_gsp,
    quaternion_norm_from_stabilizer,
    sp6_basis,
    stabilizer_from_basis,
)
from src.domain.qforms.forms import qform_equivalent
from src.domain.qforms.hermitian import hermitian_trace_form
from src.domain.qforms.models import HermitianForm, QForm
from src.domain.scalars.fields import rationals
from src.domain.scalars.linalg import determinant, transpose
from src.domain.wedge.contraction import derivation_action
from src.shared.exceptions import ClassificationError


def test_sp6_basis_is_symplectic():
    ctx = rationals()
    basis = sp6_basis(ctx)
    assert len(basis) == 21
    # xi in sp6 iff M_J xi is symmetric; for [[A, B], [C, -A^t]] that means B, C symmetric
    for xi in basis:
        b = [row[3:] for row in xi[:3]]
        c = [row[:3] for row in xi[3:]]
        assert b == transpose(b)
        assert c == transpose(c)


def test_split_point_has_sl3_stabilizer():
    ctx = rationals()
    stab = lie_stabilizer(split_x(ctx, 2))
    assert stab.dim == 8
    with pytest.raises(ClassificationError):
        quaternion_norm_from_stabilizer(stab)


def test_semistable_point_stabilizer():
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, [0, 1, 1, 1])
    point = normal_form_point(nf, nf.pattern_vector(1))
    stab = lie_stabilizer(point)
    assert stab.dim == 3
    for xi in stab.basis:
        assert derivation_action(xi, point).is_zero()
    assert qform_equivalent(quaternion_norm_from_stabilizer(stab), QForm(ctx=ctx, diag=[1, 1, 1, 1]))


def test_extended_stabilizer_contains_the_center():
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, [0, 1, 1, 1])
    extended = lie_stabilizer_gsp(normal_form_point(nf, nf.pattern_vector(1)))
    assert extended.dim == 4


@pytest.mark.parametrize("y", [(0, 1, 1, 1), (2, 1, 3, 1), (1, 2, 5, -1), (0, 1, 1, -1)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_pattern_stabilizers_match_trace_forms(y, m):
    """Pattern m gives the quaternion with norm the trace form of diag(1, y_m)."""
    ctx = rationals()
    nf = NormalFormX.from_values(ctx, list(y))
    stab = lie_stabilizer(normal_form_point(nf, nf.pattern_vector(m)))
    assert stab.dim == 3
    expected = hermitian_trace_form(HermitianForm(ctx=ctx, d=nf.f1, diag=[1, nf.y(m)]))
    assert qform_equivalent(quaternion_norm_from_stabilizer(stab), expected)


def random_invertible(ctx, rng, n):
    while True:
        p = [[ctx.coerce(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if determinant(ctx, p) != 0:
            return p


@pytest.mark.parametrize("y", [(0, 1, 1, 1), (2, 1, 3, 1), (0, 1, 1, -1)])
def test_quaternion_norm_ignores_the_basis(y):
    ctx = rationals()
    rng = random.Random(31)
    nf = NormalFormX.from_values(ctx, list(y))
    stab = lie_stabilizer(normal_form_point(nf, nf.pattern_vector(1)))
    reference = quaternion_norm_from_stabilizer(stab)
    for _ in range(3):
        p = random_invertible(ctx, rng, 3)
        moved = [
            [[sum((p[a][k] * stab.basis[k][r][c] for k in range(3)), ctx.zero()) for c in range(6)] for r in range(6)]
            for a in range(3)
        ]
        rebased = stabilizer_from_basis(ctx, moved)
        assert qform_equivalent(quaternion_norm_from_stabilizer(rebased), reference)

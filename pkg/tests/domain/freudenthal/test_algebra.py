"""
Tests for reduced Freudenthal algebras H3(C, Gamma).
"""
import random

import pytest

from src.domain.composition.cayley_dickson import CDTower
from src.domain.composition.zorn import ZornAlgebra
from src.domain.freudenthal.algebra import (
    FreudenthalAlgebra,
    adjoint,
    algebra_trace_form,
    cross,
    cubic_data,
    embed_element,
    jordan_mul,
    make_hermitian_element,
    trace_bilinear,
)
from src.domain.qforms.forms import qform_equivalent
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import prime_field, rationals
from src.shared.exceptions import FieldError, HermitianViolationError, ZeroInputError


def h3(lambdas, gamma=(1, 1, 1)):
    return FreudenthalAlgebra(coordinate=CDTower(ctx=rationals(), lambdas=list(lambdas)), gamma=list(gamma))


def test_dimensions_and_labels():
    assert [h3([-1] * n).dim for n in range(4)] == [6, 9, 15, 27]
    assert h3([]).label == "H3(Q; 1, 1, 1)"
    assert FreudenthalAlgebra(coordinate=ZornAlgebra(ctx=rationals()), gamma=[1, 1, 1]).dim == 27


def test_construction_checks():
    with pytest.raises(ZeroInputError):
        h3([-1], gamma=(1, 0, 1))
    with pytest.raises(FieldError):
        FreudenthalAlgebra(coordinate=CDTower(ctx=prime_field(3)), gamma=[1, 1, 1])


def test_cubic_data_of_a_diagonal_element():
    alg = h3([-1, -1])
    x = alg.from_parts([1, 2, 3])
    data = cubic_data(x)
    assert (data.trace, data.spur, data.norm) == (6, 11, 6)
    assert data.adjoint == alg.from_parts([6, 3, 2])


@pytest.mark.parametrize("lambdas,gamma", [([-1, -1, -1], (1, 1, 1)), ([-1, 2], (1, -3, 2))])
def test_jordan_identities(lambdas, gamma):
    alg = h3(lambdas, gamma)
    rng = random.Random(13)
    x, y = alg.random_element(rng, 3), alg.random_element(rng, 3)
    assert jordan_mul(x, y) == jordan_mul(y, x)
    assert cross(x, x) == adjoint(x).scale(2)
    assert trace_bilinear(x, y) == jordan_mul(x, y).trace()


def test_zorn_coordinates():
    alg = FreudenthalAlgebra(coordinate=ZornAlgebra(ctx=rationals()), gamma=[1, 1, 1])
    x = alg.random_element(random.Random(1), 2)
    data = cubic_data(x)
    assert jordan_mul(x, data.adjoint) == alg.scalar(data.norm)


def test_hermitian_violation_is_located():
    alg = h3([-1])
    k = alg.coordinate
    u = k.element([0, 1])
    zero = k.zero()
    rows = [[k.scalar(1), u, zero], [u, k.scalar(2), zero], [zero, zero, k.scalar(3)]]
    with pytest.raises(HermitianViolationError) as info:
        make_hermitian_element(alg, rows)
    assert info.value.entry == (2, 1)
    rows[1][0] = u.conj()
    assert make_hermitian_element(alg, rows).trace() == 6


def test_trace_form_of_the_rational_algebra():
    report = algebra_trace_form(h3([]))
    assert report.certified
    assert qform_equivalent(report.form, QForm(ctx=rationals(), diag=[1, 1, 1, 2, 2, 2]))


def test_embedding_preserves_products():
    small, big = h3([-1]), h3([-1, -1])
    rng = random.Random(4)
    x, y = small.random_element(rng, 3), small.random_element(rng, 3)
    assert embed_element(big, jordan_mul(x, y)) == jordan_mul(embed_element(big, x), embed_element(big, y))

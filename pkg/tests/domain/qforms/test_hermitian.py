"""
Tests for hermitian forms over quadratic extensions.
"""
import pytest

from src.domain.qforms.hermitian import (
    has_trivial_discriminant,
    hermitian_equivalent,
    hermitian_trace_form,
    is_norm,
)
from src.domain.qforms.models import HermitianForm
from src.domain.scalars.fields import prime_field, rationals
from src.shared.exceptions import ContextMismatchError


def herm(d, *diag):
    return HermitianForm(ctx=rationals(), d=d, diag=list(diag))


def test_trace_form_of_diagonal_form():
    """<y> over Q(sqrt(-d)) has trace form <y, d y>."""
    assert hermitian_trace_form(herm(1, 1, 2)).diag == [1, 1, 2, 2]
    assert hermitian_trace_form(herm(3, 5)).diag == [5, 15]


def test_split_extension_gives_hyperbolic_trace_form():
    """When -d is a square the extension is Q x Q."""
    h = herm(-1, 1, 2, 3)
    assert h.split
    assert hermitian_trace_form(h).diag == [1, -1] * 3


def test_norms():
    """Norms from Q(i) and Q(sqrt(-2))."""
    assert is_norm(rationals(), 2, 1)
    assert not is_norm(rationals(), 3, 1)
    assert is_norm(rationals(), 3, 2)
    assert is_norm(rationals(), 5, -1)
    assert is_norm(prime_field(5), 2, 1)


def test_trivial_discriminant():
    """det 2 is a norm from Q(i), det 3 is not."""
    assert has_trivial_discriminant(herm(1, 1, 1, 2))
    assert not has_trivial_discriminant(herm(1, 1, 1, 3))


def test_hermitian_equivalence():
    """<1> and <3> differ over Q(i); <1,1> and <2,2> agree."""
    assert hermitian_equivalent(herm(1, 1, 1), herm(1, 2, 2))
    assert not hermitian_equivalent(herm(1, 1), herm(1, 3))
    assert not hermitian_equivalent(herm(1, 1), herm(1, 1, 1))
    with pytest.raises(ContextMismatchError):
        hermitian_equivalent(herm(1, 1), herm(2, 1))

"""
Tests for diagonalization, equivalence and isotropy of quadratic forms.
"""
import pytest

from src.domain.qforms.forms import (
    anisotropic_places,
    diagonalize_gram,
    discriminant_class,
    hyperbolic,
    is_hyperbolic_pfister,
    is_isotropic,
    pfister,
    qform_equivalent,
    qform_invariants,
    radical_split,
    represents,
    two_fold_split_by_symbols,
)
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import prime_field, rationals
from src.domain.scalars.linalg import diagonal, mat_mul, to_matrix, transpose
from src.shared.exceptions import ContextMismatchError, DegenerateFormError, PreconditionError, ZeroInputError


def form(*diag, ctx=None):
    return QForm(ctx=ctx or rationals(), diag=list(diag))


def test_diagonalize_hyperbolic_plane():
    """The zero-diagonal plane diagonalizes with a certificate."""
    ctx = rationals()
    gram = to_matrix(ctx, [[0, 1], [1, 0]])
    q, p = diagonalize_gram(ctx, gram)
    assert mat_mul(transpose(p), mat_mul(gram, p)) == diagonal(ctx, q.diag)
    assert qform_equivalent(q, hyperbolic(ctx, 1))


def test_diagonalize_rejects_degenerate_and_asymmetric():
    """Degenerate Gram matrices report their radical."""
    ctx = rationals()
    with pytest.raises(DegenerateFormError) as info:
        diagonalize_gram(ctx, to_matrix(ctx, [[1, 1], [1, 1]]))
    assert info.value.radical_dim == 1
    with pytest.raises(PreconditionError):
        diagonalize_gram(ctx, to_matrix(ctx, [[1, 2], [0, 1]]))
    assert radical_split(ctx, to_matrix(ctx, [[1, 1], [1, 1]])) == ([1], 1)


def test_zero_entries_are_rejected():
    """QForm is non-degenerate."""
    with pytest.raises(ZeroInputError):
        form(1, 0)


def test_pfister_and_hyperbolic():
    """<<-1,-1>> is the sum of four squares."""
    assert pfister(rationals(), [-1, -1]).diag == [1, 1, 1, 1]
    assert hyperbolic(rationals(), 2).diag == [1, -1, 1, -1]


def test_rational_equivalence():
    """Hasse-Minkowski separates <1,1> from <3,3> but not from <2,2>."""
    assert qform_equivalent(form(1, 1), form(2, 2))
    assert not qform_equivalent(form(1, 1), form(3, 3))
    assert not qform_equivalent(form(1, 1), form(1, -1))
    assert qform_equivalent(form(1, -1, 1, -1), form(1, 1, -1, -1))
    assert not qform_equivalent(form(1, 1), form(1, 1, 1))


def test_finite_field_equivalence():
    """Over F_p forms are classified by dimension and discriminant."""
    f5 = prime_field(5)
    assert qform_equivalent(form(1, 1, ctx=f5), form(2, 3, ctx=f5))
    assert not qform_equivalent(form(1, 1, ctx=f5), form(1, 2, ctx=f5))


def test_mixed_contexts_fail():
    """Forms over different fields cannot be compared."""
    with pytest.raises(ContextMismatchError):
        qform_equivalent(form(1), form(1, ctx=prime_field(5)))


def test_invariants():
    """<-1,-1> has trivial discriminant and Hasse symbol -1 at 2 and infinity."""
    inv = qform_invariants(form(-1, -1))
    assert inv.disc_class == 1
    assert inv.signature == (0, 2)
    assert inv.hasse == {"2": -1, "inf": -1}


def test_anisotropic_places_of_quaternion_norms():
    """Norms of (-1,-1) and (-1,-3) are ramified at {2, inf} and {3, inf}."""
    assert anisotropic_places(form(1, 1, 1, 1)) == ["2", "inf"]
    assert anisotropic_places(form(1, 1, 3, 3)) == ["3", "inf"]
    assert anisotropic_places(hyperbolic(rationals(), 2)) == []


def test_isotropy():
    """Global isotropy over Q and F_p."""
    assert not is_isotropic(form(1, 1, 1))
    assert is_isotropic(form(1, 1, -1))
    assert not is_isotropic(form(1, 1, 1, -7))
    assert is_isotropic(form(1, 1, 1, 1, -7))
    assert is_isotropic(form(1, 1, 1, ctx=prime_field(3)))
    assert not is_isotropic(form(1, 1, ctx=prime_field(3)))


def test_represents():
    """5 is a sum of two squares and 3 is not."""
    assert represents(form(1, 1), 5)
    assert not represents(form(1, 1), 3)


def test_two_fold_split_by_symbols():
    """(1, b) is always split and (-1, -1) never."""
    assert two_fold_split_by_symbols(1, 7)
    assert not two_fold_split_by_symbols(-1, -1)


def test_octonion_sized_forms_with_large_determinants():
    """Entries scaled by even powers keep their class even when the determinant is far beyond the bit bound."""
    big = form(3 ** 9, 5 ** 9, 7 ** 9, 11 ** 9, 1, 1, 1, 1)
    small = form(3, 5, 7, 11, 1, 1, 1, 1)
    assert big.determinant().numerator.bit_length() > 64
    assert discriminant_class(big) == 1155
    assert qform_invariants(big).disc_class == 1155
    assert qform_equivalent(big, small)
    assert not qform_equivalent(big, form(3, 5, 7, 11, 1, 1, 1, 2))


GRID = [1, -1, 2, -2, 3, -3, 5, -5]


@pytest.mark.parametrize("a", GRID)
@pytest.mark.parametrize("b", GRID)
def test_hyperbolic_pfister_agrees_with_symbols(a, b):
    """<<a, b>> is hyperbolic exactly when (a, b) is trivial at every place."""
    assert is_hyperbolic_pfister(pfister(rationals(), [a, b])) == two_fold_split_by_symbols(a, b)

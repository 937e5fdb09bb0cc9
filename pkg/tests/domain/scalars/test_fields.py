"""
Tests for the exact field contexts.
"""
from fractions import Fraction

import pytest

from src.domain.scalars.fields import (
    ModElement,
    QuadElement,
    prime_field,
    quad_ext,
    rational_sqrt,
    rationals,
    square_class_product,
    squarefree_part,
)
from src.shared.exceptions import (
    ContextMismatchError,
    FactorizationBoundError,
    FieldError,
    MissingSquareRootError,
    ZeroInputError,
)


def test_squarefree_part_of_rationals():
    """Square classes are represented by signed squarefree integers."""
    assert squarefree_part(Fraction(8, 3)) == 6
    assert squarefree_part(-12) == -3
    assert squarefree_part(Fraction(1, 4)) == 1


def test_squarefree_part_rejects_zero_and_large_inputs():
    """Zero has no square class and inputs beyond the bit bound are refused."""
    with pytest.raises(ZeroInputError):
        squarefree_part(0)
    with pytest.raises(FactorizationBoundError):
        squarefree_part(2 ** 70 + 1, bit_bound=64)


def test_rational_sqrt():
    """Only perfect rational squares have roots."""
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None


def test_invalid_contexts_are_rejected():
    """Quadratic extensions need a non-square d and prime fields an odd prime."""
    with pytest.raises(FieldError):
        quad_ext(4)
    with pytest.raises(FieldError):
        prime_field(9)
    with pytest.raises(FieldError):
        prime_field(2)


def test_labels():
    """Labels follow the field-spec grammar."""
    assert rationals().label == "Q"
    assert quad_ext(-1).label == "Q(sqrt:-1)"
    assert prime_field(3).label == "F:3"
    assert prime_field(5).characteristic == 5
    assert rationals().characteristic == 0


def test_square_tests():
    """is_square in Q, F_p and Q(sqrt(-1))."""
    assert rationals().is_square(Fraction(4, 9))
    assert not rationals().is_square(2)
    assert prime_field(7).is_square(2)
    assert not prime_field(7).is_square(3)
    assert quad_ext(-1).is_square(-1)
    with pytest.raises(ZeroInputError):
        rationals().is_square(0)


def test_square_roots_in_gaussian_rationals():
    """sqrt(-1) and sqrt(2i) exist in Q(i); sqrt(2) does not."""
    k = quad_ext(-1)
    i = k.square_root(-1)
    assert i * i == -1
    root = k.square_root(QuadElement(0, 2, -1))
    assert root * root == QuadElement(0, 2, -1)
    assert k.sqrt(2) is None
    with pytest.raises(MissingSquareRootError):
        k.square_root(2)


def test_fourth_roots():
    """fourth_root tries both square roots."""
    assert rationals().fourth_root(16) == 2
    c = quad_ext(-1).fourth_root(-4)
    assert c ** 4 == -4


def test_prime_field_arithmetic():
    """Fractions map into F_p and division is exact."""
    f5 = prime_field(5)
    third = f5.coerce(Fraction(1, 3))
    assert third * 3 == 1
    assert third == ModElement(2, 5)
    with pytest.raises(ZeroDivisionError):
        f5.coerce(Fraction(1, 5))


def test_residues_hash_like_their_canonical_integer():
    """Residues and their canonical integers are interchangeable as set and dict keys."""
    assert hash(ModElement(10, 7)) == hash(3)
    assert len({ModElement(3, 7), 3, ModElement(10, 7)}) == 1
    counts = {0: "zero", 3: "three"}
    assert counts[ModElement(7, 7)] == "zero"
    assert counts[ModElement(-4, 7)] == "three"
    assert hash(QuadElement(Fraction(1, 2), 0, -1)) == hash(Fraction(1, 2))


def test_mixing_contexts_fails():
    """Elements of different fields do not combine."""
    with pytest.raises(ContextMismatchError):
        ModElement(1, 5) + ModElement(1, 7)
    with pytest.raises(ContextMismatchError):
        rationals().coerce(ModElement(1, 5))
    with pytest.raises(ContextMismatchError):
        quad_ext(-1).coerce(QuadElement(0, 1, 2))


def test_square_class_product_factors_entries_only():
    """The class of a product is combined entry by entry, never from the raw product."""
    assert square_class_product([2, 3, 6]) == 1
    assert square_class_product([-2, Fraction(3, 4), 5]) == -30
    assert square_class_product([]) == 1
    large = [3 ** 9, 5 ** 9, 7 ** 9, 11 ** 9, 13 ** 9]
    assert square_class_product(large, bit_bound=64) == 3 * 5 * 7 * 11 * 13

"""
Tests for the field-spec, scalar and matrix grammar.
"""
from fractions import Fraction

import pytest

from src.domain.scalars.fields import FieldKind, ModElement, QuadElement, prime_field, quad_ext, rationals
from src.domain.scalars.parsing import (
    format_matrix,
    format_scalar,
    parse_field_spec,
    parse_matrix,
    parse_rational,
    parse_scalar,
    parse_scalar_list,
)
from src.shared.exceptions import ContextMismatchError, FieldError, InputParseError


def test_parse_field_specs():
    """Q, Q(sqrt:D) and F:p."""
    assert parse_field_spec("Q").kind == FieldKind.RATIONALS
    assert parse_field_spec("Q(sqrt:-1)") == quad_ext(-1)
    assert parse_field_spec("F:3") == prime_field(3)
    with pytest.raises(InputParseError):
        parse_field_spec("R")
    with pytest.raises(FieldError):
        parse_field_spec("F:4")


def test_parse_rationals():
    """Integers and fractions; zero denominators are parse errors."""
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(" 7 ") == 7
    with pytest.raises(InputParseError):
        parse_rational("1/0")
    with pytest.raises(InputParseError):
        parse_rational("x")


def test_parse_scalars_in_each_field():
    """Each field reads its own literals."""
    assert parse_scalar("3/4", rationals()) == Fraction(3, 4)
    assert parse_scalar("1+2*sqrt(-1)", quad_ext(-1)) == QuadElement(1, 2, -1)
    assert parse_scalar("-sqrt(-1)", quad_ext(-1)) == QuadElement(0, -1, -1)
    assert parse_scalar("2 mod 5", prime_field(5)) == ModElement(2, 5)
    assert parse_scalar("1/3", prime_field(5)) == ModElement(2, 5)


def test_scalars_from_another_field_are_rejected():
    """A root of -1 is not a rational and residues must match p."""
    with pytest.raises(ContextMismatchError):
        parse_scalar("sqrt(-1)", rationals())
    with pytest.raises(ContextMismatchError):
        parse_scalar("2 mod 7", prime_field(5))


def test_format_scalar_reads_back():
    """format_scalar output is accepted by parse_scalar."""
    k = quad_ext(-1)
    for value in (QuadElement(1, -2, -1), QuadElement(0, 3, -1), QuadElement(Fraction(1, 2), 0, -1)):
        assert parse_scalar(format_scalar(value), k) == value
    assert parse_scalar(format_scalar(ModElement(4, 7)), prime_field(7)) == ModElement(4, 7)


def test_scalar_lists_and_matrices():
    """Comma lists and semicolon-separated matrix rows."""
    assert parse_scalar_list("1, -2, 1/2", rationals()) == [1, -2, Fraction(1, 2)]
    m = parse_matrix("1,2;0,1", rationals())
    assert m == [[1, 2], [0, 1]]
    assert format_matrix(m) == "1,2;0,1"
    with pytest.raises(InputParseError):
        parse_matrix("1,2;3", rationals())

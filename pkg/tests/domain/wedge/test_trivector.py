"""
Tests for trivector coordinates, parsing and formatting.
"""
import pytest

from src.domain.scalars.fields import QuadElement, quad_ext, rationals
from src.domain.wedge.trivector import (
    TRIPLES,
    TriVector,
    format_trivector,
    parse_trivector,
    sort_triple,
    trivector_from_json,
    trivector_to_json,
)
from src.domain.wedge.zcoords import z_identify, z_to_trivector
from src.shared.exceptions import ContextMismatchError, InputParseError, PreconditionError


def test_triples_are_sorted_and_complete():
    assert len(TRIPLES) == 20
    assert TRIPLES[0] == (1, 2, 3)
    assert TRIPLES[-1] == (4, 5, 6)


def test_sort_triple_signs():
    assert sort_triple(1, 2, 3) == (1, (1, 2, 3))
    assert sort_triple(2, 1, 3) == (-1, (1, 2, 3))
    assert sort_triple(3, 1, 2) == (1, (1, 2, 3))
    assert sort_triple(1, 1, 3)[0] == 0


def test_antisymmetric_coordinates():
    ctx = rationals()
    t = TriVector.from_terms(ctx, {(4, 2, 6): 5})
    assert t.coord(2, 4, 6) == -5
    assert t.coord(4, 2, 6) == 5
    assert t.coord(6, 4, 2) == -5
    assert t.coord(1, 1, 2) == 0


def test_parse_and_format():
    ctx = rationals()
    t = parse_trivector("-1*e123 - 2*e456 + 1*e156", ctx)
    assert t.coord(1, 2, 3) == -1
    assert t.coord(4, 5, 6) == -2
    assert format_trivector(t) == "-1*e123 + 1*e156 - 2*e456"
    assert parse_trivector("e213", ctx) == parse_trivector("-e123", ctx)
    assert parse_trivector("1/2*e124 + 1/2*e124", ctx) == TriVector.basis_vector(ctx, 1, 2, 4)
    assert format_trivector(TriVector.zero(ctx)) == "0"
    assert parse_trivector("0", ctx).is_zero()


def test_parse_quadratic_coefficients():
    ctx = quad_ext(-1)
    t = TriVector.from_terms(ctx, {(1, 2, 3): QuadElement(1, 2, -1), (3, 4, 5): QuadElement(0, -1, -1)})
    assert parse_trivector(format_trivector(t), ctx) == t


@pytest.mark.parametrize("text", ["3*e112", "e1234", "2*f123", "e12"])
def test_parse_rejects_malformed_terms(text):
    with pytest.raises(InputParseError):
        parse_trivector(text, rationals())


def test_json_mapping():
    ctx = rationals()
    t = parse_trivector("3*e125 - 1/2*e346", ctx)
    assert trivector_to_json(t) == {"125": "3", "346": "-1/2"}
    assert trivector_from_json({"215": "-3", "346": "-1/2"}, ctx) == t
    with pytest.raises(InputParseError):
        trivector_from_json({"117": "1"}, ctx)


def test_shape_and_context_checks():
    with pytest.raises(PreconditionError):
        TriVector(rationals(), [0] * 19)
    with pytest.raises(ContextMismatchError):
        TriVector.zero(rationals()) + TriVector.zero(quad_ext(-1))


def test_z_coordinates():
    ctx = rationals()
    t = parse_trivector("e123 + 2*e423 + 3*e156 - e246", ctx)
    z = z_identify(t)
    assert z.x0 == -1
    assert z.a[0][0] == 2
    assert z.b[0][0] == 3
    assert z_to_trivector(z, ctx) == t

"""Exact scalar fields and linear algebra."""
from src.domain.scalars.fields import (
    FieldCtx,
    FieldKind,
    ModElement,
    QuadElement,
    Scalar,
    prime_field,
    quad_ext,
    quad_norm_conj,
    rational_sqrt,
    rationals,
    square_class_product,
    squarefree_part,
)
from src.domain.scalars.parsing import (
    format_matrix,
    format_scalar,
    parse_field_spec,
    parse_matrix,
    parse_rational,
    parse_scalar,
    parse_scalar_list,
)

__all__ = [
    "FieldCtx",
    "FieldKind",
    "ModElement",
    "QuadElement",
    "Scalar",
    "format_matrix",
    "format_scalar",
    "parse_field_spec",
    "parse_matrix",
    "parse_rational",
    "parse_scalar",
    "parse_scalar_list",
    "prime_field",
    "quad_ext",
    "quad_norm_conj",
    "rational_sqrt",
    "rationals",
    "square_class_product",
    "squarefree_part",
]

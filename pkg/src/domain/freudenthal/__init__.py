"""Reduced Freudenthal algebras H3(C, Gamma) and the maps from flags into them."""
from src.domain.freudenthal.algebra import (
    CubicData,
    FreudenthalAlgebra,
    FreudenthalElement,
    TraceFormReport,
    adjoint,
    algebra_trace_form,
    cross,
    cubic_data,
    embed_element,
    expected_trace_form,
    jordan_mul,
    make_hermitian_element,
    trace_bilinear,
)
from src.domain.freudenthal.maps import (
    AlgebraDescriptor,
    FreudenthalFlagReport,
    dim6_form,
    dim9_form,
    orbit_to_freudenthal,
    verify_inclusions,
)

__all__ = [
    "AlgebraDescriptor",
    "CubicData",
    "FreudenthalAlgebra",
    "FreudenthalElement",
    "FreudenthalFlagReport",
    "TraceFormReport",
    "adjoint",
    "algebra_trace_form",
    "cross",
    "cubic_data",
    "dim6_form",
    "dim9_form",
    "embed_element",
    "expected_trace_form",
    "jordan_mul",
    "make_hermitian_element",
    "orbit_to_freudenthal",
    "trace_bilinear",
    "verify_inclusions",
]

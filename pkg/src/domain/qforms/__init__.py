"""Quadratic and hermitian forms over Q and F_p."""
from src.domain.qforms.finite import count_representations, nondegenerate_count
from src.domain.qforms.forms import (
    anisotropic_places,
    diagonalize_gram,
    hasse_invariant,
    hyperbolic,
    is_hyperbolic_pfister,
    is_isotropic,
    is_locally_isotropic,
    pfister,
    qform_equivalent,
    qform_invariants,
    radical_split,
    represents,
    two_fold_split_by_symbols,
)
from src.domain.qforms.hermitian import (
    has_trivial_discriminant,
    hermitian_discriminant,
    hermitian_equivalent,
    hermitian_trace_form,
    is_norm,
)
from src.domain.qforms.hilbert import INFINITY, hilbert_symbol, is_local_square, relevant_places
from src.domain.qforms.models import HermitianForm, QForm, QFormInvariants

__all__ = [
    "INFINITY",
    "HermitianForm",
    "QForm",
    "QFormInvariants",
    "anisotropic_places",
    "count_representations",
    "diagonalize_gram",
    "has_trivial_discriminant",
    "hasse_invariant",
    "hermitian_discriminant",
    "hermitian_equivalent",
    "hermitian_trace_form",
    "hilbert_symbol",
    "hyperbolic",
    "is_hyperbolic_pfister",
    "is_isotropic",
    "is_local_square",
    "is_locally_isotropic",
    "is_norm",
    "nondegenerate_count",
    "pfister",
    "qform_equivalent",
    "qform_invariants",
    "radical_split",
    "relevant_places",
    "represents",
    "two_fold_split_by_symbols",
]

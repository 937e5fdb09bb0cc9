"""The phi matrix, the quartic f and the relative invariants f1, f2."""
from src.domain.invariants.phi import PHI_TABLE, PhiMatrix, permutation_sign, phi_matrix, quartic_f
from src.domain.invariants.relative import (
    InvariantReport,
    f1_f2_semistable,
    f1_normal_form_polynomial,
    f1_value,
    f2_gram,
    f2_normal_form_polynomial,
    f2_value,
    mj_phi,
)

__all__ = [
    "PHI_TABLE",
    "InvariantReport",
    "PhiMatrix",
    "f1_f2_semistable",
    "f1_normal_form_polynomial",
    "f1_value",
    "f2_gram",
    "f2_normal_form_polynomial",
    "f2_value",
    "mj_phi",
    "permutation_sign",
    "phi_matrix",
    "quartic_f",
]

"""The symplectic space V6 and its third exterior power."""
from src.domain.wedge.contraction import (
    act_matrix,
    act_product,
    act_wedge3,
    compound3,
    contract_psi,
    derivation_action,
    iota,
    join_components,
    kernel_basis,
    psi_matrix,
    spanning_vector,
    split_components,
)
from src.domain.wedge.symplectic import (
    GroupKind,
    SympElement,
    SymplecticSpace,
    check_symplectic,
    h_a,
    random_similitude,
    random_symplectic,
    sl2_pair_block,
    sl3_block,
    symplectic_matrix,
)
from src.domain.wedge.trivector import (
    TRIPLES,
    TriVector,
    format_trivector,
    parse_trivector,
    sort_triple,
    trivector_from_json,
    trivector_to_json,
)
from src.domain.wedge.zcoords import ZCoords, z_identify, z_to_trivector

__all__ = [
    "GroupKind",
    "SympElement",
    "SymplecticSpace",
    "TRIPLES",
    "TriVector",
    "ZCoords",
    "act_matrix",
    "act_product",
    "act_wedge3",
    "check_symplectic",
    "compound3",
    "contract_psi",
    "derivation_action",
    "format_trivector",
    "h_a",
    "iota",
    "join_components",
    "kernel_basis",
    "parse_trivector",
    "psi_matrix",
    "random_similitude",
    "random_symplectic",
    "sl2_pair_block",
    "sl3_block",
    "sort_triple",
    "spanning_vector",
    "split_components",
    "symplectic_matrix",
    "trivector_from_json",
    "trivector_to_json",
    "z_identify",
    "z_to_trivector",
]

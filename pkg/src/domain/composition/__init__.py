"""Composition algebras: Cayley-Dickson towers and Zorn vector matrices."""
from src.domain.composition.cayley_dickson import CDElement, CDTower, cd_mul, cd_norm_conj
from src.domain.composition.towers import (
    FlagTower,
    OctonionClass,
    build_flag_tower,
    octonion_norm_of_class,
)
from src.domain.composition.zorn import (
    ZornAlgebra,
    ZornElement,
    zorn_mul,
    zorn_norm_form,
    zorn_ops,
)

__all__ = [
    "CDElement",
    "CDTower",
    "FlagTower",
    "OctonionClass",
    "ZornAlgebra",
    "ZornElement",
    "build_flag_tower",
    "cd_mul",
    "cd_norm_conj",
    "octonion_norm_of_class",
    "zorn_mul",
    "zorn_norm_form",
    "zorn_ops",
]

"""Orbit normal forms, canonicalization, stabilizers and witness matrices."""
from src.domain.orbits.canonical import Canonicalization, canonicalize_v, hyperbolic_q
from src.domain.orbits.normal_form import NormalFormX, normal_form_point, split_x
from src.domain.orbits.stabilizer import (
    ExtendedStabilizer,
    LieStabilizer,
    lie_stabilizer,
    lie_stabilizer_gsp,
    quaternion_norm_from_stabilizer,
    sp6_basis,
)
from src.domain.orbits.witnesses import WitnessCase, WitnessReport, verify_witness

__all__ = [
    "Canonicalization",
    "ExtendedStabilizer",
    "LieStabilizer",
    "NormalFormX",
    "WitnessCase",
    "WitnessReport",
    "canonicalize_v",
    "hyperbolic_q",
    "lie_stabilizer",
    "lie_stabilizer_gsp",
    "normal_form_point",
    "quaternion_norm_from_stabilizer",
    "sp6_basis",
    "split_x",
    "verify_witness",
]

"""Flags of composition algebras attached to semistable orbits."""
from src.domain.flags.classification import CompositionClass, CompositionKind, classify_composition_form
from src.domain.flags.descriptor import FlagDescriptor, flag_of_point, flags_equal

__all__ = [
    "CompositionClass",
    "CompositionKind",
    "FlagDescriptor",
    "classify_composition_form",
    "flag_of_point",
    "flags_equal",
]

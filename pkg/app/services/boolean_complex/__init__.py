"""
app/services/boolean_complex/__init__.py

Boolean σ-algebras of commuting projections, σ-complexes, and the
Kochen-Specker decision procedures.
"""

from __future__ import annotations

from .algebra import (
    algebra_contains,
    algebra_from_atoms,
    common_subalgebra,
    complement,
    element_mask,
    generate_algebra,
    join,
    meet,
    projection_equal,
    triple_algebra,
)
from .embedding import (
    complex_skeleton,
    embeds_in_single_algebra,
    instance_from_complex,
    sigma_complex_from_instance,
)
from .kochen_specker import (
    brute_force_colorable,
    brute_force_colorings,
    complete_orthogonal_pairs,
    direction_classes,
    is_valid_coloring,
    ks_colorable,
    ks_colorable_z3,
    validate_instance,
)
from .spin import direction_of_atom, spin1_atom, spin1_component, spin1_operators, spin1_square

__all__ = [
    "complement",
    "meet",
    "join",
    "projection_equal",
    "generate_algebra",
    "algebra_from_atoms",
    "common_subalgebra",
    "algebra_contains",
    "element_mask",
    "triple_algebra",
    "sigma_complex_from_instance",
    "instance_from_complex",
    "complex_skeleton",
    "embeds_in_single_algebra",
    "ks_colorable",
    "ks_colorable_z3",
    "brute_force_colorings",
    "brute_force_colorable",
    "is_valid_coloring",
    "validate_instance",
    "direction_classes",
    "complete_orthogonal_pairs",
    "spin1_operators",
    "spin1_component",
    "spin1_square",
    "spin1_atom",
    "direction_of_atom",
]

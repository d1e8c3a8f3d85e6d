"""
app/services/combine/__init__.py

Combined systems: tensor embeddings, Schmidt forms and lattice formulas over
product properties.
"""

from __future__ import annotations

from .lattice import (
    direct_sum_membership,
    evaluate_lattice,
    gamma_formula,
    lattice_depth,
    lattice_leaves,
    lattice_residual,
)
from .schmidt import decisive_schmidt, rank_tolerance, schmidt
from .tensor import (
    embed_left,
    embed_right,
    product_projection,
    singlet_vector,
    spin_half_component,
    spin_half_operators,
    total_spin_projection,
)

__all__ = [
    "embed_left",
    "embed_right",
    "product_projection",
    "singlet_vector",
    "spin_half_operators",
    "spin_half_component",
    "total_spin_projection",
    "schmidt",
    "decisive_schmidt",
    "rank_tolerance",
    "gamma_formula",
    "evaluate_lattice",
    "direct_sum_membership",
    "lattice_depth",
    "lattice_leaves",
    "lattice_residual",
]

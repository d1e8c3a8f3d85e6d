"""
app/services/linalg/__init__.py

Dense complex linear algebra substrate: spectral decomposition, products,
matrix functions and seeded random operators.
"""

from __future__ import annotations

from ..shared.guards import inf_norm
from .products import SVDResult, commutator, identity, kron_all, outer, partial_trace, svd, tensor
from .random import (
    random_commuting_family,
    random_density,
    random_hermitian,
    random_projection,
    random_unit_vector,
    random_unitary,
)
from .spectral import (
    hermitian_eigendecompose,
    is_hermitian,
    is_unitary,
    matrix_exp_unitary,
    spectral_reconstruct,
)

__all__ = [
    "inf_norm",
    "identity",
    "outer",
    "tensor",
    "kron_all",
    "commutator",
    "svd",
    "SVDResult",
    "partial_trace",
    "hermitian_eigendecompose",
    "spectral_reconstruct",
    "matrix_exp_unitary",
    "is_hermitian",
    "is_unitary",
    "random_unit_vector",
    "random_hermitian",
    "random_unitary",
    "random_density",
    "random_projection",
    "random_commuting_family",
]

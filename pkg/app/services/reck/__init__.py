"""
app/services/reck/__init__.py

Unitary-to-mesh compiler, mesh simulation and observable realization.
"""

from __future__ import annotations

from .compiler import (
    MeshVerification,
    decompose,
    mesh_from_stages,
    reconstruct,
    simulate,
    stage_bound,
    stage_matrix,
    verify,
)
from .observables import port_probabilities, realize_observable

__all__ = [
    "MeshVerification",
    "stage_matrix",
    "stage_bound",
    "mesh_from_stages",
    "decompose",
    "reconstruct",
    "simulate",
    "verify",
    "realize_observable",
    "port_probabilities",
]

"""
app/seed/__init__.py

Public seed facade for the engine's reference data.

PACKAGE STRUCTURE
-----------------
- app.seed.defaults
    Canonical static operators and vectors

- app.seed.reference_data
    Loaders for bundled JSON reference data

- app.seed
    Public facade
"""

from __future__ import annotations

from .defaults import (
    BUNDLED_KS_INSTANCE,
    CANONICAL_FRAME,
    DOWN_X,
    DOWN_Z,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    SINGLET,
    SPIN_HALF_X,
    SPIN_HALF_Y,
    SPIN_HALF_Z,
    SPIN_ONE_X,
    SPIN_ONE_Y,
    SPIN_ONE_Z,
    UP_X,
    UP_Z,
)
from .reference_data import bundled_instance_path, load_bundled_ks_instance, load_ks_instance

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "SPIN_HALF_X",
    "SPIN_HALF_Y",
    "SPIN_HALF_Z",
    "UP_Z",
    "DOWN_Z",
    "UP_X",
    "DOWN_X",
    "SINGLET",
    "SPIN_ONE_X",
    "SPIN_ONE_Y",
    "SPIN_ONE_Z",
    "CANONICAL_FRAME",
    "BUNDLED_KS_INSTANCE",
    "load_ks_instance",
    "load_bundled_ks_instance",
    "bundled_instance_path",
]

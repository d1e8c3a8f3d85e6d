"""
app/seed/defaults.py

Canonical constant operators and reference vectors.

PURPOSE
-------
This module contains only static numeric data used throughout the engine:
Pauli and spin matrices, the standard spin-1/2 eigenvectors, the singlet
vector, the canonical spin-1 frame and the file name of the bundled KS set.

IMPORTANT
---------
This file contains no logic beyond literal construction and no Flask-specific
behavior. It is intentionally pure data. Arrays are read-only.

CONVENTIONS
-----------
- ħ = 1 for spin operators.
- Spin-1/2: s_k = σ_k / 2 with the Pauli matrices in the s_z eigenbasis
  (|↑⟩ = e₁, |↓⟩ = e₂).
- Spin-1: standard basis with S_z = diag(1, 0, −1).
"""

from __future__ import annotations

import numpy as np

from ..models.helpers import frozen_matrix, frozen_vector

_SQRT_HALF = np.sqrt(0.5)

# -------------------------------------------------------------------
# Spin-1/2
# -------------------------------------------------------------------
PAULI_X = frozen_matrix([[0, 1], [1, 0]])
PAULI_Y = frozen_matrix([[0, -1j], [1j, 0]])
PAULI_Z = frozen_matrix([[1, 0], [0, -1]])

SPIN_HALF_X = frozen_matrix(PAULI_X / 2)
SPIN_HALF_Y = frozen_matrix(PAULI_Y / 2)
SPIN_HALF_Z = frozen_matrix(PAULI_Z / 2)

# Eigenvectors φ⁺/φ⁻ of s_z and s_x
UP_Z = frozen_vector([1, 0])
DOWN_Z = frozen_vector([0, 1])
UP_X = frozen_vector([_SQRT_HALF, _SQRT_HALF])
DOWN_X = frozen_vector([_SQRT_HALF, -_SQRT_HALF])

# Singlet √½(φ⁺⊗ψ⁻ − φ⁻⊗ψ⁺) in the product basis |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩
SINGLET = frozen_vector([0, _SQRT_HALF, -_SQRT_HALF, 0])

# -------------------------------------------------------------------
# Spin-1
# -------------------------------------------------------------------
SPIN_ONE_X = frozen_matrix(_SQRT_HALF * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
SPIN_ONE_Y = frozen_matrix(_SQRT_HALF * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]]))
SPIN_ONE_Z = frozen_matrix(np.diag([1, 0, -1]))

CANONICAL_FRAME = (
    np.array([1.0, 0.0, 0.0]),
    np.array([0.0, 1.0, 0.0]),
    np.array([0.0, 0.0, 1.0]),
)

# Bundled data files under app/seed/data/
BUNDLED_KS_INSTANCE = "ks_peres33.json"

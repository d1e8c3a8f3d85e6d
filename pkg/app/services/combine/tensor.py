"""
app/services/combine/tensor.py

Embeddings of one-factor properties into a combined system, and the spin-1/2
pair used by the worked examples.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import Projection, Tolerance, default_tolerance
from ...seed.defaults import SINGLET, SPIN_HALF_X, SPIN_HALF_Y, SPIN_HALF_Z
from ..shared.errors import BadShapeError
from ..shared.guards import require_unit_vector
from ..states import closed_interval, observable, spectral_measure

_SPIN_HALF = {"x": SPIN_HALF_X, "y": SPIN_HALF_Y, "z": SPIN_HALF_Z}


def embed_left(x: Projection, dim_right: int) -> Projection:
    """
    x ⊗ I.

    EXAMPLES
    --------
    embed_left(I₂, 2)   -> I₄
    embed_left(0, 3)    -> 0
    """
    return Projection(np.kron(x.matrix, np.eye(dim_right, dtype=np.complex128)))


def embed_right(y: Projection, dim_left: int) -> Projection:
    return Projection(np.kron(np.eye(dim_left, dtype=np.complex128), y.matrix))


def product_projection(phi: Any, psi: Any, tol: Tolerance | float | None = None) -> Projection:
    """
    P_{φ⊗ψ} for unit vectors φ, ψ.

    RAISES
    ------
    NotUnitVectorError
    """
    eps = default_tolerance(tol).eps
    return Projection.onto(np.kron(require_unit_vector(phi, eps), require_unit_vector(psi, eps)))


def singlet_vector() -> np.ndarray:
    """
    √½(φ⁺_z⊗ψ⁻_z − φ⁻_z⊗ψ⁺_z) in the basis |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩.
    """
    return np.array(SINGLET)


def spin_half_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return np.array(SPIN_HALF_X), np.array(SPIN_HALF_Y), np.array(SPIN_HALF_Z)


def spin_half_component(axis: str | Any) -> np.ndarray:
    """
    s_n = n·s for an axis name ('x', 'y', 'z') or a unit 3-vector.
    """
    if isinstance(axis, str):
        if axis not in _SPIN_HALF:
            raise BadShapeError(f"Unknown spin axis {axis!r}", axis=axis)
        return np.array(_SPIN_HALF[axis])
    direction = np.asarray(axis, dtype=np.float64).reshape(-1)
    if direction.shape != (3,):
        raise BadShapeError("Spin axis must be a 3-vector", shape=list(direction.shape))
    direction = direction / np.linalg.norm(direction)
    return direction[0] * SPIN_HALF_X + direction[1] * SPIN_HALF_Y + direction[2] * SPIN_HALF_Z


def total_spin_projection(axis: str | Any, value: float, tol: Tolerance | float | None = None) -> Projection:
    """
    The property S_n^tot = value on 2⊗2, S_n^tot = s_n⊗I + I⊗s_n.

    EXAMPLES
    --------
    total_spin_projection('z', 0) ∧ total_spin_projection('x', 0)   -> P_singlet
    total_spin_projection('z', 2)                                   -> 0
    """
    eps = default_tolerance(tol).eps
    component = spin_half_component(axis)
    total = np.kron(component, np.eye(2)) + np.kron(np.eye(2), component)
    window = closed_interval(value - 10 * eps, value + 10 * eps)
    return spectral_measure(observable(total, tol), window, tol)

"""
app/services/shared/guards.py

Precondition guards shared by all service modules.

PURPOSE
-------
Each guard normalizes its input (to a complex128 numpy array where relevant),
checks one precondition, and either returns the normalized value or raises the
matching `QSigmaError` subclass with the measured residual in `details`.

Guards never log; the caller decides whether a failure is worth a log line.

FUNCTIONS PROVIDED
------------------
- inf_norm(a)
- as_matrix(a)
- require_square(a)
- require_same_dim(a, b)
- require_hermitian(a, tol)
- require_unitary(u, tol)
- require_unit_vector(psi, tol)
- require_projection(x, tol)
- require_commuting(x, y, tol)
"""

from __future__ import annotations

from typing import Any

import numpy as np

from .errors import (
    BadShapeError,
    DimMismatchError,
    NonCommutingGeneratorsError,
    NotHermitianError,
    NotProjectionError,
    NotSquareError,
    NotUnitaryError,
    NotUnitVectorError,
)


def inf_norm(a: Any) -> float:
    """
    Largest absolute entry of `a` (0.0 for an empty array).
    """
    array = np.asarray(a)
    if array.size == 0:
        return 0.0
    return float(np.max(np.abs(array)))


def as_matrix(a: Any) -> np.ndarray:
    """
    Convert `a` to a finite complex128 2-D array.

    RAISES
    ------
    BadShapeError
        For non-2-D input, empty input, or NaN/Inf entries.
    """
    array = np.asarray(a, dtype=np.complex128)
    if array.ndim != 2 or array.size == 0:
        raise BadShapeError(f"Expected a non-empty matrix, got shape {array.shape}", shape=list(array.shape))
    if not np.all(np.isfinite(array)):
        raise BadShapeError("Matrix entries must be finite")
    return array


def require_square(a: Any) -> np.ndarray:
    array = as_matrix(a)
    rows, cols = array.shape
    if rows != cols:
        raise NotSquareError(f"Expected a square matrix, got {rows}x{cols}", rows=rows, cols=cols)
    return array


def require_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimMismatchError(
            f"Dimension mismatch: {a.shape} vs {b.shape}",
            left=list(a.shape),
            right=list(b.shape),
        )


def require_hermitian(a: Any, eps: float) -> np.ndarray:
    """
    Return `a` as a square matrix, raising NotHermitianError if ‖a − a†‖∞ > eps.
    """
    array = require_square(a)
    residual = inf_norm(array - array.conj().T)
    if residual > eps:
        raise NotHermitianError(
            f"Operator is not Hermitian (residual {residual:.3e} > {eps:.1e})",
            residual=residual,
            eps=eps,
        )
    return array


def require_unitary(u: Any, eps: float) -> np.ndarray:
    array = require_square(u)
    residual = inf_norm(array @ array.conj().T - np.eye(array.shape[0]))
    if residual > eps:
        raise NotUnitaryError(
            f"Operator is not unitary (residual {residual:.3e} > {eps:.1e})",
            residual=residual,
            eps=eps,
        )
    return array


def require_unit_vector(psi: Any, eps: float) -> np.ndarray:
    """
    Return `psi` as a flat complex vector after checking | ‖psi‖ − 1 | ≤ eps.
    """
    vector = np.asarray(psi, dtype=np.complex128)
    if vector.ndim == 2 and 1 in vector.shape:
        vector = vector.reshape(-1)
    if vector.ndim != 1 or vector.size == 0 or not np.all(np.isfinite(vector)):
        raise BadShapeError(f"Expected a finite vector, got shape {vector.shape}", shape=list(vector.shape))
    norm = float(np.linalg.norm(vector))
    if abs(norm - 1.0) > eps:
        raise NotUnitVectorError(f"Vector norm is {norm!r}, expected 1", norm=norm, eps=eps)
    return vector


def require_projection(x: Any, eps: float) -> np.ndarray:
    array = require_hermitian(x, eps)
    residual = inf_norm(array @ array - array)
    if residual > eps:
        raise NotProjectionError(
            f"Operator is not idempotent (residual {residual:.3e} > {eps:.1e})",
            residual=residual,
            eps=eps,
        )
    return array


def require_commuting(x: np.ndarray, y: np.ndarray, eps: float, **context: Any) -> None:
    norm = inf_norm(x @ y - y @ x)
    if norm > eps:
        raise NonCommutingGeneratorsError(
            f"Projections do not commute (‖[P,Q]‖∞ = {norm:.3e})",
            commutator_norm=norm,
            **context,
        )

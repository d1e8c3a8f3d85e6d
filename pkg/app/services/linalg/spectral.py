"""
app/services/linalg/spectral.py

Hermitian spectral machinery.

PURPOSE
-------
Everything that needs eigenvalues goes through this module:

- hermitian_eigendecompose   distinct eigenvalues + eigenprojections
- spectral_reconstruct       Σ λᵢ Pᵢ
- matrix_exp_unitary         exp(−i t/ħ H) through the eigenbasis
- is_hermitian / is_unitary  boolean predicates for callers that branch

CLUSTERING RULE
---------------
`numpy.linalg.eigh` returns eigenvalues ascending. Consecutive eigenvalues
whose gap is at most eps belong to one cluster; the cluster value is the mean
of its members and its projection is V_c V_c† over the cluster's eigenvectors.
A degenerate eigenvalue that floating point split by 1e-15 therefore yields a
single spectral projection.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import Projection, SpectralDecomposition, Tolerance, default_tolerance
from ..shared.guards import inf_norm, require_hermitian, require_square


def is_hermitian(a: Any, tol: Tolerance | float | None = None) -> bool:
    eps = default_tolerance(tol).eps
    array = require_square(a)
    return inf_norm(array - array.conj().T) <= eps


def is_unitary(u: Any, tol: Tolerance | float | None = None) -> bool:
    eps = default_tolerance(tol).eps
    array = require_square(u)
    return inf_norm(array @ array.conj().T - np.eye(array.shape[0])) <= eps


def hermitian_eigendecompose(a: Any, tol: Tolerance | float | None = None) -> SpectralDecomposition:
    """
    Spectral decomposition of a Hermitian matrix with eigenvalue clustering.

    PARAMETERS
    ----------
    a:
        Square matrix, Hermitian within tol.
    tol:
        Tolerance for the hermiticity check and for eigenvalue clustering.

    RETURNS
    -------
    SpectralDecomposition
        Distinct eigenvalues ascending, one orthogonal projection each.

    RAISES
    ------
    NotSquareError, NotHermitianError

    EXAMPLES
    --------
    diag(1/2, −1/2)  -> eigenvalues [−1/2, 1/2], projections diag(0,1), diag(1,0)
    identity(3)      -> eigenvalues [1], projection identity(3)
    """
    eps = default_tolerance(tol).eps
    array = require_hermitian(a, eps)
    hermitian = (array + array.conj().T) / 2

    values, vectors = np.linalg.eigh(hermitian)

    clusters: list[list[int]] = []
    for index, value in enumerate(values):
        if clusters and value - values[clusters[-1][-1]] <= eps:
            clusters[-1].append(index)
        else:
            clusters.append([index])

    eigenvalues = []
    projections = []
    for members in clusters:
        basis = vectors[:, members]
        eigenvalues.append(float(np.mean(values[members])))
        projections.append(Projection(basis @ basis.conj().T))

    return SpectralDecomposition(eigenvalues=eigenvalues, eigenprojections=tuple(projections))


def spectral_reconstruct(decomposition: SpectralDecomposition) -> np.ndarray:
    return decomposition.reconstruct()


def matrix_exp_unitary(
    h: Any,
    t: float,
    hbar: float = 1.0,
    tol: Tolerance | float | None = None,
) -> np.ndarray:
    """
    Return u_t = exp(−i·t/ħ·h) computed in the eigenbasis of h.

    RAISES
    ------
    NotHermitianError
        When h is not Hermitian within tol.

    EXAMPLES
    --------
    matrix_exp_unitary(h, 0.0)                    -> identity
    matrix_exp_unitary(s_z, 2π, hbar=1.0)         -> −I₂
    """
    eps = default_tolerance(tol).eps
    array = require_hermitian(h, eps)
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar!r}")

    values, vectors = np.linalg.eigh((array + array.conj().T) / 2)
    phases = np.exp(-1j * (t / hbar) * values)
    return (vectors * phases) @ vectors.conj().T

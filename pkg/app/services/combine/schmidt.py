"""
app/services/combine/schmidt.py

Schmidt decomposition Γ = Σ cᵢ φᵢ⊗ψᵢ of a vector in C^d1 ⊗ C^d2.

Γ is read row-major as the d1 × d2 matrix G[a, b] = Γ[a·d2 + b]. With
G = U·diag(s)·V† the Schmidt vectors are φᵢ = U[:, i] and ψᵢ = conj(V[:, i]).
Coefficients at or below RANK_TOLERANCE (default 1e-8) are dropped.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...models import SchmidtForm, Tolerance, default_tolerance
from ..linalg import svd
from ..shared.errors import BadShapeError, RankDetectionFailureError
from ..shared.guards import require_unit_vector
from ..shared.runtime_config import setting


def rank_tolerance() -> float:
    return float(setting("RANK_TOLERANCE", 1e-8))


def schmidt(gamma: Any, d1: int, d2: int, tol: Tolerance | float | None = None) -> SchmidtForm:
    """
    Schmidt form of a unit vector.

    RAISES
    ------
    NotUnitVectorError
    BadShapeError
        When len(gamma) ≠ d1·d2.

    EXAMPLES
    --------
    φ ⊗ ψ        -> coefficients (1,)
    singlet      -> coefficients (√½, √½)
    """
    vector = require_unit_vector(gamma, default_tolerance(tol).eps)
    if d1 < 1 or d2 < 1 or vector.shape[0] != d1 * d2:
        raise BadShapeError(
            f"Vector of length {vector.shape[0]} does not factor as {d1}x{d2}",
            length=int(vector.shape[0]),
            d1=d1,
            d2=d2,
        )
    decomposition = svd(vector.reshape(d1, d2))
    rank = int(np.count_nonzero(decomposition.singulars > rank_tolerance()))
    return SchmidtForm(
        coefficients=decomposition.singulars[:rank],
        left_basis=decomposition.u[:, :rank],
        right_basis=decomposition.v[:, :rank].conj(),
    )


def decisive_schmidt(gamma: Any, d1: int, d2: int, tol: Tolerance | float | None = None) -> SchmidtForm:
    """
    schmidt() that refuses ambiguous ranks.

    RAISES
    ------
    RankDetectionFailureError
        When a singular value lies within a factor 10 of RANK_TOLERANCE, so the
        rank cannot be decided.
    """
    vector = require_unit_vector(gamma, default_tolerance(tol).eps)
    threshold = rank_tolerance()
    if vector.shape[0] == d1 * d2:
        singulars = np.linalg.svd(vector.reshape(d1, d2), compute_uv=False)
        ambiguous = singulars[(singulars > threshold / 10) & (singulars <= threshold * 10)]
        if ambiguous.size:
            raise RankDetectionFailureError(
                "Schmidt coefficients straddle the rank tolerance",
                coefficients=ambiguous.tolist(),
                rank_tolerance=threshold,
            )
    return schmidt(vector, d1, d2, tol)

"""
app/services/states/observables.py

Observables as spectral measures.

PUBLIC API
----------
- observable(a, tol)              Hermitian matrix -> Observable
- spectral_measure(obs, s)        u(s) = Σ_{λ ∈ s} P_λ
- cumulative_projection(obs, λ)   P_λ = u((−∞, λ])
- expectation(p, obs)             tr(Aw)
- uncertainty(p, obs)             √(Exp((A − Exp A)²))
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from ...models import BorelSet, Observable, Projection, State, Tolerance, default_tolerance
from ..linalg import hermitian_eigendecompose
from ..shared.errors import DimMismatchError
from .borel import at_most


def observable(a: Any, tol: Tolerance | float | None = None) -> Observable:
    """
    Wrap a Hermitian matrix with its spectral decomposition.

    RAISES
    ------
    NotSquareError, NotHermitianError
    """
    spectrum = hermitian_eigendecompose(a, tol)
    matrix = np.asarray(a, dtype=np.complex128)
    return Observable(operator=(matrix + matrix.conj().T) / 2, spectrum=spectrum)


def _snapped(value: float, s: BorelSet, eps: float) -> float:
    ends = [end for interval in s.intervals for end in (interval.lower, interval.upper) if math.isfinite(end)]
    nearest = min(ends, key=lambda end: abs(value - end), default=None)
    if nearest is not None and abs(value - nearest) <= eps:
        return nearest
    return value


def spectral_measure(obs: Observable, s: BorelSet, tol: Tolerance | float | None = None) -> Projection:
    """
    Sum of the eigenprojections whose eigenvalue lies in s.

    An eigenvalue within eps of a finite end of s is read as that end, so the
    open/closed choice at the end decides membership.

    EXAMPLES
    --------
    spectral_measure(obs, real_line())   -> I
    spectral_measure(obs, at_most(λ))    -> P_λ, including the λ-eigenspace
    """
    eps = default_tolerance(tol).eps
    total = np.zeros((obs.dim, obs.dim), dtype=np.complex128)
    for value, projection in zip(obs.spectrum.eigenvalues, obs.spectrum.eigenprojections):
        if s.contains(_snapped(float(value), s, eps)):
            total += projection.matrix
    return Projection(total)


def cumulative_projection(obs: Observable, value: float, tol: Tolerance | float | None = None) -> Projection:
    return spectral_measure(obs, at_most(value), tol)


def _require_dims(p: State, obs: Observable) -> None:
    if p.dim != obs.dim:
        raise DimMismatchError(
            f"State has dimension {p.dim}, observable has {obs.dim}",
            state=p.dim,
            observable=obs.dim,
        )


def expectation(p: State, obs: Observable) -> float:
    _require_dims(p, obs)
    return float(np.trace(obs.operator @ p.density).real)


def uncertainty(p: State, obs: Observable) -> float:
    """
    Standard deviation ΔA of obs in state p.

    EXAMPLES
    --------
    s_z in the pure state φ⁺_x   -> 0.5
    any eigenstate of A          -> 0.0
    """
    _require_dims(p, obs)
    mean = expectation(p, obs)
    shifted = obs.operator - mean * np.eye(obs.dim)
    variance = float(np.trace(shifted @ shifted @ p.density).real)
    return math.sqrt(max(variance, 0.0))

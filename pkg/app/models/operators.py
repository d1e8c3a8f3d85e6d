"""
app/models/operators.py

Operator-level value types: tolerance policy, projections and spectral
decompositions.

PURPOSE
-------
Dense complex matrices are plain `numpy.ndarray` values of dtype complex128.
The types here wrap them where the engine needs a named invariant:

- Tolerance              absolute eps for infinity-norm comparisons
- Projection             Hermitian idempotent ("a property")
- SpectralDecomposition  distinct eigenvalues + orthogonal eigenprojections

IMPORTANT
---------
Constructors do not validate the mathematical invariants; the services that
produce these values do (`app.services.shared.guards`). This keeps it possible
to build deliberately invalid values for negative tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..services.shared.runtime_config import setting
from .helpers import frozen_matrix, frozen_real


@dataclass(frozen=True)
class Tolerance:
    """
    Absolute tolerance used for hermiticity, idempotence and equality checks.

    FIELDS
    ------
    eps:
        Nonnegative bound on the infinity norm (largest absolute entry) of a
        residual matrix.
    """

    eps: float = 1e-9

    def __post_init__(self) -> None:
        if not math.isfinite(self.eps) or self.eps < 0:
            raise ValueError(f"Tolerance must be a finite nonnegative number, got {self.eps!r}")

    @classmethod
    def from_config(cls) -> "Tolerance":
        """
        Build the tolerance from the active app config (or `Config` defaults).
        """
        return cls(float(setting("TOLERANCE", 1e-9)))

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.eps * factor)


def default_tolerance(tol: Tolerance | float | None = None) -> Tolerance:
    """
    Normalize an optional tolerance argument.

    EXAMPLES
    --------
    default_tolerance(None)          -> Tolerance.from_config()
    default_tolerance(1e-6)          -> Tolerance(1e-6)
    default_tolerance(Tolerance(0))  -> Tolerance(0)
    """
    if tol is None:
        return Tolerance.from_config()
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol))


@dataclass(frozen=True, eq=False)
class Projection:
    """
    A Hermitian idempotent operator, i.e. a property of the system.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", frozen_matrix(self.matrix))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.matrix).real)))

    @classmethod
    def zero(cls, dim: int) -> "Projection":
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    @classmethod
    def identity(cls, dim: int) -> "Projection":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def onto(cls, vector: Any) -> "Projection":
        """
        Rank-1 projection P_ψ onto the ray of `vector` (normalized here).
        """
        psi = np.asarray(vector, dtype=np.complex128).reshape(-1)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()))

    def complement(self) -> "Projection":
        return Projection(np.eye(self.dim, dtype=np.complex128) - self.matrix)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """
    Spectral form A = Σ λᵢ Pᵢ of a Hermitian operator.

    FIELDS
    ------
    eigenvalues:
        Distinct eigenvalues, ascending.
    eigenprojections:
        One Projection per eigenvalue, pairwise orthogonal, summing to I.
    """

    eigenvalues: np.ndarray
    eigenprojections: tuple[Projection, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", frozen_real(self.eigenvalues))
        object.__setattr__(self, "eigenprojections", tuple(self.eigenprojections))
        if len(self.eigenvalues) != len(self.eigenprojections):
            raise ValueError("eigenvalues and eigenprojections must have the same length")

    @property
    def dim(self) -> int:
        return self.eigenprojections[0].dim if self.eigenprojections else 0

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(p.rank for p in self.eigenprojections)

    def reconstruct(self) -> np.ndarray:
        total = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for value, projection in zip(self.eigenvalues, self.eigenprojections):
            total += value * projection.matrix
        return total

"""
app/models/dynamics.py

Symmetries, evolution specifications and classical-limit report rows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .helpers import frozen_matrix, frozen_real

if TYPE_CHECKING:
    from ..services.shared.operation_results import Assertion


class SymmetryKind(str, enum.Enum):
    UNITARY = "unitary"
    ANTIUNITARY = "antiunitary"


@dataclass(frozen=True, eq=False)
class SymmetryOp:
    """
    Automorphism x ↦ u x u⁻¹ (unitary) or x ↦ u conj(x) u⁻¹ (antiunitary).

    For the antiunitary kind `matrix` is the linear part u of the operator
    u∘K, K being complex conjugation in the computational basis.
    """

    kind: SymmetryKind
    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SymmetryKind(self.kind))
        object.__setattr__(self, "matrix", frozen_matrix(self.matrix))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])


@dataclass(frozen=True, eq=False)
class EvolutionSpec:
    """
    Hamiltonian dynamics u_t = exp(−(i/ħ) H t).
    """

    hamiltonian: np.ndarray
    hbar: float = 1.0
    time_grid: np.ndarray = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "hamiltonian", frozen_matrix(self.hamiltonian))
        grid = np.sort(np.asarray(self.time_grid, dtype=np.float64).reshape(-1))
        object.__setattr__(self, "time_grid", frozen_real(grid))
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")

    @property
    def dim(self) -> int:
        return int(self.hamiltonian.shape[0])


@dataclass(frozen=True)
class ClassicalLimitRow:
    n: int
    var_abar: float
    delta_comm: float


@dataclass(frozen=True)
class ClassicalLimitReport:
    """
    Scaling study over n-fold products.

    FIELDS
    ------
    rows:
        One row per n, in input order.
    exponent:
        Log-log slope of delta_comm against n (None when fewer than two
        strictly positive points).
    variance_scaling_ok:
        (ΔĀ)²·n equal to (ΔA)² for every row within the scaled tolerance.
    monotone_decreasing:
        delta_comm strictly decreasing along increasing n (or identically
        zero, for commuting observables).
    final_ratio:
        delta_comm of the last row over delta_comm of the first row.
    checks:
        One assertion per row for the variance scaling plus one for the
        commutator decay. `passed` is False when any of them failed.
    """

    rows: tuple[ClassicalLimitRow, ...]
    exponent: float | None
    variance_scaling_ok: bool
    monotone_decreasing: bool
    final_ratio: float | None
    checks: tuple[Assertion, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> tuple[Assertion, ...]:
        return tuple(check for check in self.checks if not check.passed)

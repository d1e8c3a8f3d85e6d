"""
app/models/mesh.py

Interferometer mesh programs.

A MeshProgram realizes U = D · T†(s₁) · T†(s₂) · … · T†(s_m) where D holds the
output phases exp(i αᵢ) and the stages are listed in the order of the product,
starting with T₂₁, T₃₁, T₃₂, ….
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .helpers import frozen_real


@dataclass(frozen=True)
class TwoModeStage:
    """
    Beam splitter with phase shifter acting on modes j > k (zero-based).

    omega:
        Splitter angle in radians.
    phi:
        Phase in radians, in [0, 2π).
    """

    j: int
    k: int
    omega: float
    phi: float


@dataclass(frozen=True, eq=False)
class MeshProgram:
    dim: int
    stages: tuple[TwoModeStage, ...]
    output_phases: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "output_phases", frozen_real(self.output_phases))
        if self.output_phases.shape[0] != self.dim:
            raise ValueError(
                f"MeshProgram needs {self.dim} output phases, got {self.output_phases.shape[0]}"
            )


@dataclass(frozen=True, eq=False)
class ObservableRealization:
    """
    Mesh that maps eigenvectors of A to output ports, plus the port grouping.

    port_groups:
        (eigenvalue, ports) pairs in ascending eigenvalue order; the port sets
        partition range(dim).
    """

    mesh: MeshProgram
    port_groups: tuple[tuple[float, tuple[int, ...]], ...]

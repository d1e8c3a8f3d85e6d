"""
app/services/reck/compiler.py

Compile an n × n unitary into a triangular mesh of two-mode stages.

STAGE MATRIX
------------
A stage on modes j > k is the identity except for the block

    [T_jj  T_jk]   [e^{iφ} sin ω   e^{iφ} cos ω]
    [T_kj  T_kk] = [cos ω          −sin ω      ]

ELIMINATION
-----------
Right-multiplying U by T_jk mixes columns j and k. For each row j = n−1 … 1
(zero-based) and each k = j−1 … 0 the stage is chosen to zero the entry
(j, k): with a = u_jj and b = u_jk

    φ = arg b − arg a  (mod 2π),   ω = atan2(|a|, |b|)

and the stage is skipped when |b| ≤ 1e-14. Rows already reduced keep their
zeros because a unitary row with zeros left of its diagonal has zeros below
it too. What remains is a diagonal unitary D:

    U · T_{n,n−1} ⋯ T_{3,1} T_{2,1} = D
    U = D · T_{2,1}† · T_{3,1}† · T_{3,2}† ⋯ T_{n,n−1}†

MeshProgram stores the stages in that product order and D as phases αᵢ with
D = diag(exp(iαᵢ)).
"""

from __future__ import annotations

import math
from typing import Any, NamedTuple, Sequence

import numpy as np

from ...models import MeshProgram, Tolerance, TwoModeStage, default_tolerance
from ...reports.instrumentation import timed_event
from ..shared.errors import DimMismatchError, IndexOutOfRangeError
from ..shared.guards import inf_norm, require_square, require_unit_vector, require_unitary

SKIP_THRESHOLD = 1e-14
_TWO_PI = 2 * math.pi


class MeshVerification(NamedTuple):
    residual: float
    passed: bool


def stage_bound(n: int) -> int:
    return n * (n - 1) // 2


def _check_stage(stage: TwoModeStage, dim: int) -> None:
    if not (0 <= stage.k < stage.j < dim):
        raise IndexOutOfRangeError(
            f"Stage modes (j={stage.j}, k={stage.k}) invalid for dimension {dim}",
            j=stage.j,
            k=stage.k,
            dim=dim,
        )


def stage_matrix(stage: TwoModeStage, dim: int) -> np.ndarray:
    """
    The dim × dim matrix of one stage.

    RAISES
    ------
    IndexOutOfRangeError
        Unless 0 ≤ k < j < dim.

    EXAMPLES
    --------
    ω = π/2, φ = 0   -> block [[1, 0], [0, −1]]
    ω = 0,   φ = 0   -> block [[0, 1], [1, 0]]
    """
    _check_stage(stage, dim)
    matrix = np.eye(dim, dtype=np.complex128)
    phase = np.exp(1j * stage.phi)
    sin, cos = math.sin(stage.omega), math.cos(stage.omega)
    matrix[stage.j, stage.j] = phase * sin
    matrix[stage.j, stage.k] = phase * cos
    matrix[stage.k, stage.j] = cos
    matrix[stage.k, stage.k] = -sin
    return matrix


def mesh_from_stages(dim: int, stages: Sequence[TwoModeStage], phases: Sequence[float]) -> MeshProgram:
    """
    Build a MeshProgram after checking every stage's modes.
    """
    for stage in stages:
        _check_stage(stage, dim)
    return MeshProgram(dim=dim, stages=tuple(stages), output_phases=np.asarray(phases, dtype=np.float64))


def _solve_stage(a: complex, b: complex, j: int, k: int) -> TwoModeStage:
    phi = 0.0 if abs(a) == 0 else (np.angle(b) - np.angle(a)) % _TWO_PI
    omega = math.atan2(abs(a), abs(b))
    return TwoModeStage(j=j, k=k, omega=float(omega), phi=float(phi))


def decompose(u: Any, tol: Tolerance | float | None = None) -> MeshProgram:
    """
    Triangular mesh realizing u.

    RAISES
    ------
    NotUnitaryError

    EXAMPLES
    --------
    identity            -> no stages, zero phases
    Haar 4 × 4          -> 6 stages, reconstruction residual < 1e-9
    """
    eps = default_tolerance(tol).eps
    work = require_unitary(u, eps).copy()
    dim = work.shape[0]

    applied: list[TwoModeStage] = []
    with timed_event("MESH_DECOMPOSED", dim=dim) as extra:
        for j in range(dim - 1, 0, -1):
            for k in range(j - 1, -1, -1):
                b = work[j, k]
                if abs(b) <= SKIP_THRESHOLD:
                    continue
                stage = _solve_stage(work[j, j], b, j, k)
                work = work @ stage_matrix(stage, dim)
                applied.append(stage)
        extra["stages"] = len(applied)

    phases = np.angle(np.diag(work)) % _TWO_PI
    return MeshProgram(dim=dim, stages=tuple(reversed(applied)), output_phases=phases)


def reconstruct(mesh: MeshProgram) -> np.ndarray:
    """
    D · T(s₁)† · T(s₂)† ⋯ in stored order.
    """
    result = np.diag(np.exp(1j * np.asarray(mesh.output_phases)))
    for stage in mesh.stages:
        result = result @ stage_matrix(stage, mesh.dim).conj().T
    return result


def simulate(mesh: MeshProgram, state: Any, tol: Tolerance | float | None = None) -> np.ndarray:
    """
    Detection probabilities |U ψ|² per output port.

    RAISES
    ------
    NotUnitVectorError, DimMismatchError
    """
    vector = require_unit_vector(state, default_tolerance(tol).eps)
    if vector.shape[0] != mesh.dim:
        raise DimMismatchError(
            f"Input has {vector.shape[0]} modes, mesh has {mesh.dim}",
            input=int(vector.shape[0]),
            mesh=mesh.dim,
        )
    amplitudes = reconstruct(mesh) @ vector
    return np.abs(amplitudes) ** 2


def verify(mesh: MeshProgram, target: Any, tol: Tolerance | float | None = None) -> MeshVerification:
    """
    ‖reconstruct(mesh) − target‖∞ and whether it is within tol.
    """
    eps = default_tolerance(tol).eps
    matrix = require_square(target)
    if matrix.shape[0] != mesh.dim:
        raise DimMismatchError(
            f"Target has dimension {matrix.shape[0]}, mesh has {mesh.dim}",
            target=int(matrix.shape[0]),
            mesh=mesh.dim,
        )
    residual = inf_norm(reconstruct(mesh) - matrix)
    return MeshVerification(residual=residual, passed=residual <= eps)

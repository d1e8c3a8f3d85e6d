"""
app/scenarios/measurement.py

An ideal measurement interaction followed by reading the pointer is not
injective on properties, so no automorphism of the property lattice
represents it.

SETUP
-----
System dimension 2, apparatus dimension 3, index s·3 + a for |s⟩|a⟩.
The interaction is the permutation |s⟩|a⟩ ↦ |s⟩|(a + s + 1) mod 3⟩, the
ready state is ψ₀ = |0⟩, φ_k = |k − 1⟩ and ψ_k = |k⟩ for k = 1, 2.

Both P_{φ⊗ψ₀} with φ = (φ₁ + φ₂)/√2 and P_{φ₁⊗ψ₀} end in P_{φ₁⊗ψ₁} after
the interaction and conditioning on the pointer reading P_{φ₁} ⊗ P_{ψ₁}.
"""

from __future__ import annotations

import math

import numpy as np

from ..models import Projection, State, SymmetryOp, Tolerance, default_tolerance
from ..services.conditioning import luders
from ..services.dynamics import apply_symmetry, inverse_symmetry, push_state, unitary_symmetry
from ..services.linalg import random_unitary
from ..services.shared.guards import inf_norm
from ..services.shared.operation_results import ScenarioResult
from ..services.shared.runtime_config import setting
from ..services.states import pure_state
from .runner import finish, start

SYSTEM_DIM = 2
APPARATUS_DIM = 3
PREIMAGE_SEPARATION = 0.1


def basis(dim: int, index: int) -> np.ndarray:
    vector = np.zeros(dim, dtype=np.complex128)
    vector[index] = 1.0
    return vector


def interaction_unitary() -> np.ndarray:
    size = SYSTEM_DIM * APPARATUS_DIM
    u = np.zeros((size, size), dtype=np.complex128)
    for s in range(SYSTEM_DIM):
        for a in range(APPARATUS_DIM):
            u[s * APPARATUS_DIM + (a + s + 1) % APPARATUS_DIM, s * APPARATUS_DIM + a] = 1.0
    return u


def _measure(interaction: SymmetryOp, reading: Projection, p: State, tol: Tolerance | float | None) -> State:
    return luders(push_state(interaction, p), reading, tol)


def scenario_measurement_noninjective(tol: Tolerance | float | None = None) -> ScenarioResult:
    eps = default_tolerance(tol).eps
    log, instrumentation = start("measurement")

    instrumentation.start_stage("prepare")
    phi_1, phi_2 = basis(SYSTEM_DIM, 0), basis(SYSTEM_DIM, 1)
    ready, pointer_1 = basis(APPARATUS_DIM, 0), basis(APPARATUS_DIM, 1)
    phi = (phi_1 + phi_2) / math.sqrt(2.0)

    superposed = pure_state(np.kron(phi, ready), tol)
    definite = pure_state(np.kron(phi_1, ready), tol)
    preimage_gap = inf_norm(superposed.density - definite.density)
    log.at_least("the two preimages are distinct", PREIMAGE_SEPARATION, preimage_gap)

    instrumentation.start_stage("measure")
    interaction = unitary_symmetry(interaction_unitary(), tol)
    reading = Projection(np.kron(np.outer(phi_1, phi_1.conj()), np.outer(pointer_1, pointer_1.conj())))
    target = Projection.onto(np.kron(phi_1, pointer_1))
    images = [_measure(interaction, reading, p, tol) for p in (superposed, definite)]
    for label, image in zip(("superposed", "definite"), images):
        log.at_most(f"{label} preimage maps to P_(phi1 (x) psi1)", eps, inf_norm(image.density - target.matrix))
    log.at_most("both images coincide", eps, inf_norm(images[0].density - images[1].density))

    instrumentation.start_stage("automorphisms")
    rng = np.random.default_rng(int(setting("SEED", 20240601)))
    candidates = {
        "interaction": interaction,
        "random": unitary_symmetry(random_unitary(SYSTEM_DIM * APPARATUS_DIM, rng), tol),
    }
    first, second = Projection(superposed.density), Projection(definite.density)
    for label, automorphism in candidates.items():
        pushed = apply_symmetry(automorphism, first), apply_symmetry(automorphism, second)
        log.at_least(
            f"{label} automorphism keeps the preimages apart",
            PREIMAGE_SEPARATION,
            inf_norm(pushed[0].matrix - pushed[1].matrix),
        )
        restored = apply_symmetry(inverse_symmetry(automorphism), pushed[0])
        log.at_most(f"{label} automorphism is inverted by its inverse", eps, inf_norm(restored.matrix - first.matrix))

    log.artifact("preimage_gap", preimage_gap)
    log.artifact("interaction", np.real(interaction_unitary()).astype(int).tolist())
    return finish(log, instrumentation)

"""
app/scenarios/epr.py

Singlet of two spin-½ particles measured on the left along z.
"""

from __future__ import annotations

import numpy as np

from ..models import Projection, Tolerance, default_tolerance
from ..seed.defaults import DOWN_Z, SPIN_HALF_Z, UP_Z
from ..services.boolean_complex import algebra_contains, generate_algebra, meet
from ..services.combine import embed_left, embed_right, schmidt, singlet_vector, total_spin_projection
from ..services.conditioning import conditional_probability, luders
from ..services.linalg import partial_trace
from ..services.qlogic import eval_quantum, singlet_correlation_fixtures
from ..services.shared.guards import inf_norm
from ..services.shared.operation_results import ScenarioResult
from ..services.states import closed_interval, is_pure, observable, pure_state, spectral_measure
from .runner import finish, start


def _eigenspace(matrix: np.ndarray, value: float, eps: float, tol: Tolerance | float | None) -> Projection:
    return spectral_measure(observable(matrix, tol), closed_interval(value - 10 * eps, value + 10 * eps))


def scenario_epr(tol: Tolerance | float | None = None) -> ScenarioResult:
    eps = default_tolerance(tol).eps
    log, instrumentation = start("epr")

    instrumentation.start_stage("prepare")
    gamma = singlet_vector()
    state = pure_state(gamma, tol)
    up_left = _eigenspace(np.kron(SPIN_HALF_Z, np.eye(2)), 0.5, eps, tol)
    down_right = _eigenspace(np.kron(np.eye(2), SPIN_HALF_Z), -0.5, eps, tol)

    form = schmidt(gamma, 2, 2, tol)
    log.check("singlet has Schmidt rank 2", 2, form.rank, form.rank == 2)

    for keep in ("left", "right"):
        reduced = partial_trace(state.density, 2, 2, keep=keep)
        log.at_most(f"{keep} reduced state is I/2", eps, inf_norm(reduced - np.eye(2) / 2))

    instrumentation.start_stage("condition")
    conditioned = luders(state, up_left, tol)
    product = np.kron(UP_Z, DOWN_Z)
    fidelity = float(np.real(product.conj() @ conditioned.density @ product))
    log.at_least("conditioned state is phi+ (x) psi- (fidelity)", 1.0 - eps, fidelity)
    log.check("conditioned state is pure", True, is_pure(conditioned, tol), is_pure(conditioned, tol))
    log.close_to(
        "p(I (x) s_z = -1/2 | s_z (x) I = 1/2) = 1",
        1.0,
        conditional_probability(state, down_right, up_left, tol),
        eps,
    )

    instrumentation.start_stage("correlations")
    singlet_projection = Projection.onto(gamma)
    zero_spin = meet(total_spin_projection("z", 0.0, tol), total_spin_projection("x", 0.0, tol), tol)
    log.at_most("P_singlet = (S_z = 0) meet (S_x = 0)", eps, inf_norm(zero_spin.matrix - singlet_projection.matrix))

    for fixture in singlet_correlation_fixtures():
        outcome = eval_quantum(fixture.formula, fixture.valuation, tol)
        below = (
            inf_norm(outcome.value.matrix @ singlet_projection.matrix - singlet_projection.matrix)
            if outcome.defined
            else float("inf")
        )
        log.at_most(f"P_singlet <= {fixture.name} correlation", eps, below)

    instrumentation.start_stage("interaction_algebra")
    interaction = generate_algebra([up_left], tol, label="B_left_z")
    log.check("interaction algebra has 4 elements", 4, interaction.size, interaction.size == 4)
    right_up = embed_right(Projection.onto(UP_Z), 2)
    contained = algebra_contains(interaction, right_up, tol)
    log.check("I (x) P_z+ is not in the interaction algebra", False, contained, not contained)
    left_down = embed_left(Projection.onto(DOWN_Z), 2)
    log.check(
        "P_z- (x) I is in the interaction algebra",
        True,
        algebra_contains(interaction, left_down, tol),
        algebra_contains(interaction, left_down, tol),
    )

    log.artifact("schmidt_coefficients", form.coefficients.tolist())
    log.artifact("conditioned_fidelity", fidelity)
    return finish(log, instrumentation)

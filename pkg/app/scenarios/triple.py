"""
app/scenarios/triple.py

Spin-1 triple experiment on an orthogonal frame.

ASSERTIONS
----------
- B_xyz has 8 elements.
- S_x² + S_y² + S_z² = 2I.
- p(S_x² = 1 | S_z² = 0) = 1, and likewise for a frame rotated about z.
- S_x'² for the rotated frame is not an element of B_xyz.
- S_x² − S_y² has spectrum {−1, 0, 1}; its mesh realization reproduces the
  Born probabilities of a fixed test state.
"""

from __future__ import annotations

import math

import numpy as np

from ..interchange import encode_realization
from ..models import Tolerance, default_tolerance
from ..seed.defaults import CANONICAL_FRAME
from ..services.boolean_complex import algebra_contains, spin1_atom, spin1_operators, spin1_square, triple_algebra
from ..services.conditioning import conditional_probability
from ..services.linalg import hermitian_eigendecompose
from ..services.reck import port_probabilities, realize_observable
from ..services.shared.guards import inf_norm
from ..services.shared.operation_results import ScenarioResult
from ..services.states import closed_interval, maximally_mixed, observable, prob, pure_state, spectral_measure
from .runner import finish, start

ROTATION_ANGLE = math.pi / 6
TEST_VECTOR = np.array([1.0, 1.0j, 1.0]) / math.sqrt(3.0)


def scenario_triple(tol: Tolerance | float | None = None) -> ScenarioResult:
    eps = default_tolerance(tol).eps
    log, instrumentation = start("triple")

    instrumentation.start_stage("algebra")
    x, y, z = CANONICAL_FRAME
    algebra = triple_algebra(x, y, z, tol)
    log.check("B_xyz has 8 elements", 8, algebra.size, algebra.size == 8)

    sx, sy, sz = spin1_operators()
    casimir = sx @ sx + sy @ sy + sz @ sz
    log.at_most("S_x^2 + S_y^2 + S_z^2 = 2I", eps, inf_norm(casimir - 2 * np.eye(3)))

    instrumentation.start_stage("condition")
    state = maximally_mixed(3)
    zero_z = spin1_atom(z)
    rotated_x = np.array([math.cos(ROTATION_ANGLE), math.sin(ROTATION_ANGLE), 0.0])
    log.close_to(
        "p(S_x^2 = 1 | S_z^2 = 0) = 1",
        1.0,
        conditional_probability(state, spin1_square(x), zero_z, tol),
        eps,
    )
    log.close_to(
        "p(S_x'^2 = 1 | S_z^2 = 0) = 1 for the frame rotated about z",
        1.0,
        conditional_probability(state, spin1_square(rotated_x), zero_z, tol),
        eps,
    )
    contained = algebra_contains(algebra, spin1_square(rotated_x), tol)
    log.check("S_x'^2 is not an element of B_xyz", False, contained, not contained)

    instrumentation.start_stage("realize")
    difference = sx @ sx - sy @ sy
    spectrum = hermitian_eigendecompose(difference, tol).eigenvalues
    log.check(
        "spectrum of S_x^2 - S_y^2 is {-1, 0, 1}",
        [-1.0, 0.0, 1.0],
        spectrum.tolist(),
        spectrum.shape == (3,) and np.allclose(spectrum, [-1.0, 0.0, 1.0], atol=eps, rtol=0),
    )

    with instrumentation.timed_detail("mesh"):
        realization = realize_observable(difference, tol)
    test_state = pure_state(TEST_VECTOR, tol)
    obs = observable(difference, tol)
    mesh_distribution = port_probabilities(realization, TEST_VECTOR, tol)
    born = [
        prob(test_state, spectral_measure(obs, closed_interval(value - 10 * eps, value + 10 * eps)), tol)
        for value, _ in mesh_distribution
    ]
    worst = max(abs(m - b) for (_, m), b in zip(mesh_distribution, born))
    log.at_most("mesh detection statistics match Born probabilities", eps, worst)

    log.artifact("spectrum", spectrum.tolist())
    log.artifact("realization", encode_realization(realization))
    log.artifact("atom_ranks", [atom.rank for atom in algebra.atoms])
    return finish(log, instrumentation)

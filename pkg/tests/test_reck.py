import math

import numpy as np
import pytest

from app.models import TwoModeStage
from app.seed import SPIN_HALF_X, UP_X, UP_Z
from app.services.boolean_complex import spin1_operators
from app.services.linalg import inf_norm, random_hermitian, random_unit_vector, random_unitary
from app.services.reck import (
    decompose,
    mesh_from_stages,
    port_probabilities,
    realize_observable,
    reconstruct,
    simulate,
    stage_bound,
    stage_matrix,
    verify,
)
from app.services.shared.errors import DimMismatchError, IndexOutOfRangeError, NotHermitianError, NotUnitaryError


@pytest.mark.parametrize(
    "omega,phi,block",
    [
        (math.pi / 2, 0.0, [[1, 0], [0, -1]]),
        (0.0, 0.0, [[0, 1], [1, 0]]),
    ],
)
def test_stage_matrix_examples(omega, phi, block):
    matrix = stage_matrix(TwoModeStage(j=1, k=0, omega=omega, phi=phi), 2)
    assert inf_norm(matrix[::-1, ::-1] - np.array(block)) < 1e-15


def test_stage_matrix_is_unitary(rng):
    stage = TwoModeStage(j=3, k=1, omega=float(rng.random()), phi=float(rng.random() * 6))
    matrix = stage_matrix(stage, 5)
    assert inf_norm(matrix @ matrix.conj().T - np.eye(5)) < 1e-14


def test_stage_modes_are_checked():
    with pytest.raises(IndexOutOfRangeError):
        stage_matrix(TwoModeStage(j=0, k=1, omega=0.0, phi=0.0), 3)
    with pytest.raises(IndexOutOfRangeError):
        mesh_from_stages(2, [TwoModeStage(j=2, k=0, omega=0.0, phi=0.0)], [0.0, 0.0])


def test_identity_needs_no_stages():
    mesh = decompose(np.eye(4))
    assert mesh.stages == ()
    assert np.allclose(mesh.output_phases, 0.0)


def test_haar_four_by_four(rng):
    u = random_unitary(4, rng)
    mesh = decompose(u)
    assert len(mesh.stages) == 6
    assert len(mesh.output_phases) == 4
    assert verify(mesh, u).residual < 1e-9


def test_round_trip_on_random_unitaries(rng):
    for _ in range(100):
        n = int(rng.integers(2, 9))
        u = random_unitary(n, rng)
        mesh = decompose(u)
        assert len(mesh.stages) <= stage_bound(n)
        assert inf_norm(reconstruct(mesh) - u) < 1e-9
        assert all(0 <= s.k < s.j < n for s in mesh.stages)
        assert np.all((mesh.output_phases >= 0) & (mesh.output_phases <= 2 * math.pi))


def test_two_mode_stage_is_recovered():
    stage = TwoModeStage(j=1, k=0, omega=math.pi / 4, phi=math.pi / 3)
    forward = stage_matrix(stage, 2)
    inverted = decompose(forward.conj().T)
    assert len(inverted.stages) == 1
    assert inverted.stages[0].omega == pytest.approx(math.pi / 4, abs=1e-12)
    assert inverted.stages[0].phi == pytest.approx(math.pi / 3, abs=1e-12)
    np.testing.assert_allclose(np.exp(1j * inverted.output_phases), [1.0, 1.0], atol=1e-12)
    # the stage phase moves into the output phases
    direct = decompose(forward)
    assert len(direct.stages) == 1
    assert direct.stages[0].omega == pytest.approx(math.pi / 4, abs=1e-12)
    assert inf_norm(reconstruct(direct) - forward) < 1e-12


def test_decompose_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        decompose(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_simulate_gives_probabilities(rng):
    u = random_unitary(5, rng)
    psi = random_unit_vector(5, rng)
    probabilities = simulate(decompose(u), psi)
    assert probabilities.sum() == pytest.approx(1.0)
    assert np.allclose(probabilities, np.abs(u @ psi) ** 2)
    with pytest.raises(DimMismatchError):
        simulate(decompose(u), UP_Z)


def test_verify_flags_wrong_target(rng):
    mesh = decompose(random_unitary(3, rng))
    result = verify(mesh, random_unitary(3, rng))
    assert not result.passed
    assert result.residual > 1e-3


def test_spin_half_observable_realization():
    realization = realize_observable(SPIN_HALF_X)
    assert len(realization.mesh.stages) <= 1
    assert [value for value, _ in realization.port_groups] == pytest.approx([-0.5, 0.5])
    probabilities = [p for _, p in port_probabilities(realization, UP_X)]
    assert probabilities == pytest.approx([0.0, 1.0], abs=1e-12)


def test_spin_one_observable_has_three_ports():
    sx, sy, _ = spin1_operators()
    realization = realize_observable(sx @ sx - sy @ sy)
    assert [ports for _, ports in realization.port_groups] == [(0,), (1,), (2,)]
    assert [value for value, _ in realization.port_groups] == pytest.approx([-1.0, 0.0, 1.0])


def test_degenerate_eigenvalues_share_ports(rng):
    realization = realize_observable(np.diag([2.0, 2.0, -1.0]))
    assert [ports for _, ports in realization.port_groups] == [(0,), (1, 2)]
    psi = random_unit_vector(3, rng)
    total = sum(p for _, p in port_probabilities(realization, psi))
    assert total == pytest.approx(1.0)


def test_observable_statistics_match_born_rule(rng):
    a = random_hermitian(4, rng)
    psi = random_unit_vector(4, rng)
    realization = realize_observable(a)
    mean = sum(value * p for value, p in port_probabilities(realization, psi))
    assert mean == pytest.approx(np.vdot(psi, a @ psi).real, abs=1e-9)


def test_observable_must_be_hermitian():
    with pytest.raises(NotHermitianError):
        realize_observable(np.array([[0.0, 1.0], [0.0, 0.0]]))

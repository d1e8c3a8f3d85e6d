import numpy as np
import pytest

import app.services.dynamics.classical_limit as limit_module
from app.interchange import encode_classical_limit
from app.models import Projection, SymmetryKind
from app.seed import SPIN_HALF_X, SPIN_HALF_Y, SPIN_HALF_Z, UP_X, UP_Z
from app.services.boolean_complex import element_mask, generate_algebra, join
from app.services.dynamics import (
    antiunitary_symmetry,
    apply_symmetry,
    averaged_observable,
    averaged_operator,
    classical_limit_report,
    compose_symmetries,
    decay_exponent,
    evolution_spec,
    evolution_unitary,
    evolve_pure,
    evolve_state,
    identity_symmetry,
    inverse_symmetry,
    liouville_residual,
    push_state,
    richardson_ratio,
    schroedinger_residual,
    trajectory,
    transform_operator,
    unitary_symmetry,
)
from app.services.linalg import (
    inf_norm,
    random_commuting_family,
    random_density,
    random_hermitian,
    random_unit_vector,
    random_unitary,
)
from app.services.states import prob, pure_state, state_from_density
from app.services.shared.errors import (
    BadShapeError,
    DimCapExceededError,
    DimMismatchError,
    NotHermitianError,
    NotUnitaryError,
)


def test_zero_hamiltonian_leaves_state_unchanged(rng):
    p = state_from_density(random_density(3, rng))
    spec = evolution_spec(np.zeros((3, 3)))
    assert inf_norm(evolve_state(spec, p, 5.0).density - p.density) < 1e-15


def test_evolution_group_law(rng):
    spec = evolution_spec(random_hermitian(6, rng), hbar=0.7)
    combined = evolution_unitary(spec, 0.4) @ evolution_unitary(spec, 1.1)
    assert inf_norm(combined - evolution_unitary(spec, 1.5)) < 1e-8


def test_spin_precession_half_period():
    spec = evolution_spec(SPIN_HALF_Z)
    psi = evolve_pure(spec, UP_X, np.pi)
    assert prob(pure_state(psi), Projection.onto([1, -1])) == pytest.approx(1.0, abs=1e-12)


def test_trajectory_follows_time_grid(rng):
    p = state_from_density(random_density(2, rng))
    spec = evolution_spec(SPIN_HALF_X, time_grid=[0.0, 0.5, 1.0])
    states = trajectory(spec, p)
    assert len(states) == 3
    assert inf_norm(states[0].density - p.density) < 1e-14


def test_evolution_rejects_bad_inputs():
    with pytest.raises(NotHermitianError):
        evolution_spec(np.array([[0, 1], [0, 0]]))
    spec = evolution_spec(SPIN_HALF_Z)
    with pytest.raises(DimMismatchError):
        evolve_pure(spec, [1, 0, 0], 1.0)


@pytest.mark.parametrize("dim", [2, 4, 8])
def test_liouville_residual_is_second_order(dim, rng):
    h = random_hermitian(dim, rng)
    spec = evolution_spec(2 * h / np.linalg.norm(h, 2))
    w = state_from_density(random_density(dim, rng, rank=1))
    ratio = richardson_ratio(lambda step: liouville_residual(spec, w, 0.7, step))
    assert ratio >= 3.5


def test_schroedinger_residual_is_small(rng):
    spec = evolution_spec(random_hermitian(4, rng))
    psi = random_unit_vector(4, rng)
    assert schroedinger_residual(spec, psi, 0.3) < 1e-6


def test_richardson_ratio_edge_values():
    assert np.isnan(richardson_ratio(lambda h: 0.0))
    assert richardson_ratio(lambda h: 0.0 if h < 1e-4 else 1.0) == np.inf


def test_composition_and_inverse(rng):
    u = unitary_symmetry(random_unitary(3, rng))
    a = antiunitary_symmetry(random_unitary(3, rng))
    x = Projection.onto(random_unit_vector(3, rng))

    for s in (u, a, compose_symmetries(u, a), compose_symmetries(a, a)):
        back = apply_symmetry(inverse_symmetry(s), apply_symmetry(s, x))
        assert inf_norm(back.matrix - x.matrix) < 1e-10

    both = compose_symmetries(a, u)
    direct = apply_symmetry(a, apply_symmetry(u, x))
    assert inf_norm(apply_symmetry(both, x).matrix - direct.matrix) < 1e-10
    assert compose_symmetries(a, a).kind is SymmetryKind.UNITARY
    assert compose_symmetries(u, a).kind is SymmetryKind.ANTIUNITARY


def test_antiunitary_identity_fixes_real_projections():
    s = antiunitary_symmetry(np.eye(2))
    x = Projection.onto(UP_X)
    assert inf_norm(apply_symmetry(s, x).matrix - x.matrix) < 1e-15
    assert inf_norm(apply_symmetry(identity_symmetry(2), x).matrix - x.matrix) == 0.0


def test_symmetry_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        unitary_symmetry(np.diag([1.0, 2.0]))


def test_symmetry_is_an_automorphism(rng):
    for _ in range(100):
        dim = int(rng.integers(2, 6))
        algebra = generate_algebra(random_commuting_family(dim, 3, rng))
        maker = unitary_symmetry if rng.random() < 0.5 else antiunitary_symmetry
        s = maker(random_unitary(dim, rng))
        image = generate_algebra([apply_symmetry(s, atom) for atom in algebra.atoms], dim=dim)
        assert image.size == algebra.size
        for a in range(algebra.size):
            x = algebra.element(a)
            sx = apply_symmetry(s, x)
            assert inf_norm(apply_symmetry(s, x.complement()).matrix - sx.complement().matrix) < 1e-9
            for b in range(a, algebra.size):
                y = algebra.element(b)
                joined = apply_symmetry(s, join(x, y))
                assert inf_norm(joined.matrix - join(sx, apply_symmetry(s, y)).matrix) < 1e-9
                assert element_mask(image, joined) is not None


def test_pushed_state_preserves_probabilities(rng):
    p = state_from_density(random_density(3, rng))
    s = antiunitary_symmetry(random_unitary(3, rng))
    x = Projection.onto(random_unit_vector(3, rng))
    assert prob(push_state(s, p), apply_symmetry(s, x)) == pytest.approx(prob(p, x), abs=1e-12)


def test_transform_operator_conjugates(rng):
    u = random_unitary(2, rng)
    s = unitary_symmetry(u)
    assert inf_norm(transform_operator(s, SPIN_HALF_Y) - u @ SPIN_HALF_Y @ u.conj().T) < 1e-15


def test_averaged_observable_spectrum():
    obs = averaged_observable(SPIN_HALF_Z, 3)
    assert np.allclose(obs.spectrum.eigenvalues, [-0.5, -1 / 6, 1 / 6, 0.5])
    assert inf_norm(averaged_operator(SPIN_HALF_Z, 1) - SPIN_HALF_Z) == 0.0


def test_averaged_operator_respects_dimension_cap():
    with pytest.raises(DimCapExceededError):
        averaged_operator(SPIN_HALF_Z, 13)


def test_classical_limit_scaling():
    report = classical_limit_report(SPIN_HALF_Z, SPIN_HALF_X, UP_X, range(1, 7))
    assert [row.n for row in report.rows] == [1, 2, 3, 4, 5, 6]
    for row in report.rows:
        assert abs(row.var_abar * row.n - 0.25) < 1e-9
        assert row.delta_comm == pytest.approx(0.5 * row.n**-1.5, rel=1e-9)
    assert report.variance_scaling_ok
    assert report.monotone_decreasing
    assert report.final_ratio < 0.1
    assert report.passed
    assert len(report.checks) == 7
    assert report.exponent == pytest.approx(-1.5, abs=1e-6)


def test_classical_limit_records_failed_scaling(monkeypatch):
    apply_averaged = limit_module._apply_averaged
    monkeypatch.setattr(limit_module, "_apply_averaged", lambda *args: 1.01 * apply_averaged(*args))
    report = classical_limit_report(SPIN_HALF_Z, SPIN_HALF_X, UP_X, range(1, 7))
    assert not report.variance_scaling_ok
    assert report.monotone_decreasing
    assert not report.passed
    assert [check.expected for check in report.failures] == [pytest.approx(0.25)] * 6
    assert encode_classical_limit(report)["pass"] is False


def test_classical_limit_for_commuting_observables():
    report = classical_limit_report(SPIN_HALF_Z, SPIN_HALF_Z, UP_Z, [1, 2, 3])
    assert all(row.delta_comm == 0.0 for row in report.rows)
    assert report.exponent is None
    assert report.final_ratio is None
    assert report.monotone_decreasing


def test_decay_exponent_needs_positive_points():
    assert decay_exponent([1, 2, 4], [1.0, 0.5, 0.25]) == pytest.approx(-1.0)
    with pytest.raises(BadShapeError):
        decay_exponent([1], [1.0])

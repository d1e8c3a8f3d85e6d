import math

import numpy as np
import pytest

from app.models import BorelSet, Interval, Projection, State
from app.seed import CANONICAL_FRAME, DOWN_Z, SPIN_HALF_X, SPIN_HALF_Z, UP_X, UP_Z
from app.services.boolean_complex import generate_algebra, join, meet, spin1_operators, triple_algebra
from app.services.linalg import (
    inf_norm,
    random_commuting_family,
    random_density,
    random_hermitian,
    random_projection,
    random_unit_vector,
    random_unitary,
)
from app.services.states import (
    at_most,
    atom_probabilities,
    complement_set,
    cumulative_projection,
    expectation,
    is_measure_on,
    is_pure,
    maximally_mixed,
    mix,
    observable,
    open_interval,
    point,
    prob,
    pure_state,
    real_line,
    spectral_measure,
    state_from_density,
    uncertainty,
    union,
)
from app.services.shared.errors import BadWeightsError, DimMismatchError, NotDensityError, NotUnitVectorError


def test_pure_state_probabilities():
    p = pure_state(UP_Z)
    assert prob(p, Projection.onto(UP_Z)) == 1.0
    assert prob(p, Projection.onto(UP_X)) == pytest.approx(0.5)
    assert is_pure(p)
    assert not is_pure(maximally_mixed(2))


def test_born_rule_against_inner_products(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 7))
        psi = random_unit_vector(dim, rng)
        phi = random_unit_vector(dim, rng)
        expected = abs(np.vdot(phi, psi)) ** 2
        assert prob(pure_state(psi), Projection.onto(phi)) == pytest.approx(expected, abs=1e-12)


def test_probability_of_complement_sums_to_one(rng):
    for _ in range(200):
        dim = int(rng.integers(2, 9))
        p = state_from_density(random_density(dim, rng))
        x = random_projection(dim, rng)
        assert abs(prob(p, x) + prob(p, x.complement()) - 1.0) <= 1e-9


def test_state_from_density_rejects_bad_operators():
    with pytest.raises(NotDensityError):
        state_from_density(np.diag([2.0, -1.0]))
    with pytest.raises(NotDensityError):
        state_from_density(np.eye(2))
    with pytest.raises(NotUnitVectorError):
        pure_state([1.0, 1.0])


def test_mix_of_orthogonal_pure_states():
    mixed = mix([pure_state(UP_Z), pure_state(DOWN_Z)], [0.5, 0.5])
    assert inf_norm(mixed.density - maximally_mixed(2).density) < 1e-15


@pytest.mark.parametrize(
    "weights",
    [[0.6, 0.6], [1.2, -0.2], [1.0]],
)
def test_mix_rejects_bad_weights(weights):
    with pytest.raises(BadWeightsError):
        mix([pure_state(UP_Z), pure_state(DOWN_Z)], weights)


def test_mix_rejects_mixed_dimensions():
    with pytest.raises(DimMismatchError):
        mix([maximally_mixed(2), maximally_mixed(3)], [0.5, 0.5])


def test_state_is_measure_on_random_algebras(rng):
    for _ in range(20):
        dim = int(rng.integers(2, 6))
        p = state_from_density(random_density(dim, rng))
        algebra = generate_algebra(random_commuting_family(dim, 3, rng))
        assert is_measure_on(p, algebra)
        assert atom_probabilities(p, algebra).sum() == pytest.approx(1.0)


def test_borel_set_algebra():
    assert union(point(1), open_interval(1, 2)) == BorelSet((Interval(1.0, 2.0, True, False),))
    below = at_most(0.0)
    rest = complement_set(below)
    assert not rest.contains(0.0)
    assert rest.contains(1e-12)
    assert complement_set(real_line()).intervals == ()
    assert union(open_interval(0, 1), point(1)).contains(1.0)


def test_spectral_measure_is_a_homomorphism():
    sx, sy, _ = spin1_operators()
    obs = observable(sx @ sx - sy @ sy)
    sets = [point(-1), point(0), point(1), at_most(0), open_interval(-2, 0.5), real_line()]
    eigenvalues = [-1.0, 0.0, 1.0]
    for s in sets:
        inside = [v for v in eigenvalues if s.contains(v)]
        assert spectral_measure(obs, s).rank == len(inside)
        assert spectral_measure(obs, complement_set(s)).rank == 3 - len(inside)
    for s in sets:
        for t in sets:
            measured = spectral_measure(obs, union(s, t)).matrix
            expected = spectral_measure(obs, s).matrix + spectral_measure(obs, t).matrix
            expected -= spectral_measure(obs, s).matrix @ spectral_measure(obs, t).matrix
            assert inf_norm(measured - expected) < 1e-10


def test_cumulative_projection_is_monotone():
    obs = observable(np.diag([0.0, 1.0, 2.0]))
    ranks = [cumulative_projection(obs, value).rank for value in (-1, 0, 0.5, 1, 2, 3)]
    assert ranks == [0, 1, 1, 2, 3, 3]


def test_cumulative_projection_on_rotated_spectra(rng):
    for _ in range(200):
        u = random_unitary(4, rng)
        obs = observable(u @ np.diag([-1.0, 0.0, 1.0, 1.0]) @ u.conj().T)
        ranks = [cumulative_projection(obs, value).rank for value in (-1.0, 0.0, 1.0)]
        assert ranks == [1, 2, 4]
        assert spectral_measure(obs, point(1)).rank == 2
        assert spectral_measure(obs, complement_set(point(1))).rank == 2
        assert spectral_measure(obs, complement_set(at_most(0.0))).rank == 2


def test_expectation_and_uncertainty():
    p = pure_state(UP_X)
    assert expectation(p, observable(SPIN_HALF_X)) == pytest.approx(0.5)
    assert uncertainty(p, observable(SPIN_HALF_Z)) == pytest.approx(0.5)
    assert uncertainty(p, observable(SPIN_HALF_X)) == pytest.approx(0.0, abs=1e-7)


def test_expectation_matches_spectral_sum(rng):
    for _ in range(20):
        dim = int(rng.integers(2, 7))
        p = state_from_density(random_density(dim, rng))
        a = rng.normal(size=(dim, dim))
        obs = observable(a + a.T)
        spectral = sum(
            value * prob(p, projection)
            for value, projection in zip(obs.spectrum.eigenvalues, obs.spectrum.eigenprojections)
        )
        assert math.isclose(expectation(p, obs), spectral, abs_tol=1e-9)


def test_dimension_mismatch():
    with pytest.raises(DimMismatchError):
        prob(maximally_mixed(2), Projection.identity(3))


def test_mix_is_affine(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 7))
        p = state_from_density(random_density(dim, rng))
        q = state_from_density(random_density(dim, rng))
        c = float(rng.random())
        mixed = mix([p, q], [c, 1.0 - c])
        assert inf_norm(mixed.density - (c * p.density + (1.0 - c) * q.density)) < 1e-12
        x = random_projection(dim, rng)
        assert prob(mixed, x) == pytest.approx(c * prob(p, x) + (1.0 - c) * prob(q, x), abs=1e-12)


def test_probability_is_modular_on_commuting_pairs(rng):
    for _ in range(100):
        dim = int(rng.integers(2, 7))
        p = state_from_density(random_density(dim, rng))
        x, y = random_commuting_family(dim, 2, rng)
        lhs = prob(p, join(x, y)) + prob(p, meet(x, y))
        assert lhs == pytest.approx(prob(p, x) + prob(p, y), abs=1e-9)


def test_expectation_is_linear_in_observable_and_affine_in_state(rng):
    for _ in range(50):
        dim = int(rng.integers(2, 6))
        p = state_from_density(random_density(dim, rng))
        q = state_from_density(random_density(dim, rng))
        a = random_hermitian(dim, rng)
        b = random_hermitian(dim, rng)
        alpha, beta = rng.normal(size=2)
        combined = expectation(p, observable(alpha * a + beta * b))
        separate = alpha * expectation(p, observable(a)) + beta * expectation(p, observable(b))
        assert combined == pytest.approx(separate, abs=1e-9)
        c = float(rng.random())
        obs = observable(a)
        mixed = mix([p, q], [c, 1.0 - c])
        expected = c * expectation(p, obs) + (1.0 - c) * expectation(q, obs)
        assert expectation(mixed, obs) == pytest.approx(expected, abs=1e-9)


def test_maximally_mixed_state_on_a_frame_algebra():
    algebra = triple_algebra(*CANONICAL_FRAME)
    assert is_measure_on(maximally_mixed(3), algebra)
    np.testing.assert_allclose(atom_probabilities(maximally_mixed(3), algebra), [1 / 3, 1 / 3, 1 / 3], atol=1e-12)


def test_non_positive_density_is_not_a_measure():
    # I − S_z² is the middle basis vector, which gets weight −1/2
    algebra = triple_algebra(*CANONICAL_FRAME)
    unchecked = State(np.diag([0.75, -0.5, 0.75]))
    assert not is_measure_on(unchecked, algebra)

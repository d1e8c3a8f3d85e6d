import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.models import Projection, Tolerance, default_tolerance
from app.seed import SPIN_HALF_X, SPIN_HALF_Y, SPIN_HALF_Z
from app.services.boolean_complex import spin1_operators
from app.services.linalg import (
    commutator,
    hermitian_eigendecompose,
    identity,
    inf_norm,
    is_hermitian,
    is_unitary,
    kron_all,
    matrix_exp_unitary,
    outer,
    partial_trace,
    random_commuting_family,
    random_density,
    random_hermitian,
    random_projection,
    random_unitary,
    svd,
    tensor,
)
from app.services.shared.errors import BadShapeError, NotHermitianError, NotSquareError


def test_inf_norm_is_largest_absolute_entry():
    assert inf_norm(np.array([[1, -3j], [2, 0]])) == pytest.approx(3.0)


def test_spin_half_commutator():
    assert inf_norm(commutator(SPIN_HALF_X, SPIN_HALF_Y) - 1j * SPIN_HALF_Z) < 1e-12


def test_tensor_eigenvalues_have_multiplicity_two():
    decomposition = hermitian_eigendecompose(tensor(SPIN_HALF_Z, identity(2)))
    assert_allclose(decomposition.eigenvalues, [-0.5, 0.5])
    assert decomposition.multiplicities == (2, 2)


def test_spin_one_difference_of_squares_spectrum():
    sx, sy, _ = spin1_operators()
    decomposition = hermitian_eigendecompose(sx @ sx - sy @ sy)
    assert_allclose(decomposition.eigenvalues, [-1.0, 0.0, 1.0], atol=1e-12)
    assert all(p.rank == 1 for p in decomposition.eigenprojections)


def test_identity_has_single_cluster():
    decomposition = hermitian_eigendecompose(identity(3))
    assert_allclose(decomposition.eigenvalues, [1.0])
    assert inf_norm(decomposition.eigenprojections[0].matrix - np.eye(3)) < 1e-12


@pytest.mark.parametrize("dim", range(2, 9))
def test_spectral_decomposition_laws(dim, rng):
    eps = 1e-9
    for _ in range(15):
        a = random_hermitian(dim, rng)
        decomposition = hermitian_eigendecompose(a, eps)
        projections = [p.matrix for p in decomposition.eigenprojections]

        assert inf_norm(sum(projections) - np.eye(dim)) <= 10 * eps
        for i in range(len(projections)):
            for j in range(i + 1, len(projections)):
                assert inf_norm(projections[i] @ projections[j]) <= 10 * eps
        assert inf_norm(decomposition.reconstruct() - a) <= 10 * eps
        assert np.all(np.diff(decomposition.eigenvalues) > 0)


def test_non_hermitian_is_rejected():
    with pytest.raises(NotHermitianError):
        hermitian_eigendecompose(np.array([[0, 1], [0, 0]]))


def test_non_square_is_rejected():
    with pytest.raises(NotSquareError):
        hermitian_eigendecompose(np.zeros((2, 3)))


def test_outer_is_rank_one_projection():
    psi = np.array([1, 1j]) / np.sqrt(2)
    p = outer(psi)
    assert inf_norm(p @ p - p) < 1e-12
    assert np.trace(p).real == pytest.approx(1.0)


def test_kron_all_matches_nested_kron(rng):
    a, b, c = (random_hermitian(2, rng) for _ in range(3))
    assert inf_norm(kron_all([a, b, c]) - np.kron(np.kron(a, b), c)) < 1e-12


def test_svd_reconstructs(rng):
    a = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
    result = svd(a)
    middle = np.zeros((3, 4), dtype=np.complex128)
    middle[:3, :3] = np.diag(result.singulars)
    assert inf_norm(result.u @ middle @ result.v.conj().T - a) < 1e-12
    assert np.all(np.diff(result.singulars) <= 0)


def test_partial_trace_of_product(rng):
    a = random_density(2, rng)
    b = random_density(3, rng)
    rho = np.kron(a, b)
    assert inf_norm(partial_trace(rho, 2, 3, keep="left") - a) < 1e-12
    assert inf_norm(partial_trace(rho, 2, 3, keep="right") - b) < 1e-12


def test_partial_trace_rejects_bad_factorization():
    with pytest.raises(BadShapeError):
        partial_trace(np.eye(5), 2, 3)


def test_matrix_exp_unitary_full_turn():
    assert inf_norm(matrix_exp_unitary(SPIN_HALF_Z, 2 * np.pi) + np.eye(2)) < 1e-12
    assert inf_norm(matrix_exp_unitary(SPIN_HALF_Z, 0.0) - np.eye(2)) < 1e-15


def test_matrix_exp_unitary_group_law(rng):
    h = random_hermitian(5, rng)
    product = matrix_exp_unitary(h, 0.3) @ matrix_exp_unitary(h, 0.9)
    assert inf_norm(product - matrix_exp_unitary(h, 1.2)) < 1e-8


def test_random_generators_have_their_shapes(rng):
    assert is_unitary(random_unitary(6, rng))
    assert is_hermitian(random_hermitian(6, rng))
    w = random_density(4, rng)
    assert np.trace(w).real == pytest.approx(1.0)
    assert np.min(np.linalg.eigvalsh(w)) > -1e-12

    p = random_projection(5, rng, rank=2)
    assert p.rank == 2
    assert inf_norm(p.matrix @ p.matrix - p.matrix) < 1e-10


def test_random_commuting_family_commutes(rng):
    family = random_commuting_family(4, 5, rng)
    for x in family:
        for y in family:
            assert inf_norm(commutator(x.matrix, y.matrix)) < 1e-10


def test_default_tolerance_accepts_numbers_and_instances():
    assert default_tolerance(1e-6) == Tolerance(1e-6)
    assert default_tolerance(Tolerance(0.0)).eps == 0.0
    assert default_tolerance(None).eps == pytest.approx(1e-9)
    with pytest.raises(ValueError):
        Tolerance(-1.0)


def test_projection_helpers():
    assert Projection.zero(3).rank == 0
    assert Projection.identity(3).rank == 3
    x = Projection.onto([1, 1])
    assert inf_norm(x.complement().matrix - Projection.onto([1, -1]).matrix) < 1e-12

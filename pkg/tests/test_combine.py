import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.models import LatticeLeaf, LatticeMeet, Projection
from app.seed import SINGLET, UP_X, UP_Z
from app.services.boolean_complex import meet
from app.services.combine import (
    decisive_schmidt,
    direct_sum_membership,
    embed_left,
    embed_right,
    evaluate_lattice,
    gamma_formula,
    lattice_depth,
    lattice_leaves,
    lattice_residual,
    product_projection,
    schmidt,
    singlet_vector,
    total_spin_projection,
)
from app.services.linalg import inf_norm, random_commuting_family, random_projection, random_unit_vector, random_unitary
from app.services.shared.errors import BadShapeError, RankDetectionFailureError


def test_schmidt_of_product_and_singlet():
    assert np.allclose(schmidt(np.kron(UP_Z, UP_X), 2, 2).coefficients, [1.0])
    singlet = schmidt(SINGLET, 2, 2)
    assert_allclose(singlet.coefficients, [np.sqrt(0.5), np.sqrt(0.5)])
    assert inf_norm(singlet.vector() - SINGLET) < 1e-12


def test_schmidt_reconstructs_random_vectors(rng):
    for _ in range(20):
        gamma = random_unit_vector(9, rng)
        form = schmidt(gamma, 3, 3)
        assert form.rank == 3
        assert inf_norm(form.vector() - gamma) < 1e-10
        assert np.all(np.diff(form.coefficients) <= 0)


def test_schmidt_rejects_wrong_factorization():
    with pytest.raises(BadShapeError):
        schmidt(np.eye(6)[0], 2, 2)


def test_decisive_schmidt_refuses_borderline_rank():
    gamma = np.array([1.0, 0.0, 0.0, 5e-8])
    gamma = gamma / np.linalg.norm(gamma)
    with pytest.raises(RankDetectionFailureError):
        decisive_schmidt(gamma, 2, 2)


def test_product_vector_is_a_leaf():
    formula = gamma_formula(np.kron(UP_Z, UP_X), 2, 2)
    assert isinstance(formula, LatticeLeaf)
    assert lattice_depth(formula) == 0


def test_singlet_is_meet_of_total_spin_properties():
    formula = gamma_formula(singlet_vector(), 2, 2)
    assert isinstance(formula, LatticeMeet)
    assert len(lattice_leaves(formula)) == 4
    expected = meet(total_spin_projection("z", 0), total_spin_projection("x", 0))
    assert inf_norm(expected.matrix - Projection.onto(SINGLET).matrix) < 1e-9
    assert lattice_residual(formula, expected) < 1e-9


def test_total_spin_out_of_spectrum_is_zero():
    assert total_spin_projection("z", 2).rank == 0


@pytest.mark.parametrize("d1,d2,count", [(2, 2, 40), (2, 3, 30), (3, 3, 30)])
def test_gamma_formula_evaluates_to_its_projection(d1, d2, count, rng):
    for _ in range(count):
        gamma = random_unit_vector(d1 * d2, rng)
        formula = gamma_formula(gamma, d1, d2)
        assert lattice_residual(formula, Projection.onto(gamma)) < 1e-9
        assert lattice_depth(formula) == 2 * (min(d1, d2) - 1)


def test_direct_sum_membership_for_rank_two_projection(rng):
    x = random_projection(4, rng, rank=2)
    formula = direct_sum_membership(x, 2, 2)
    assert inf_norm(evaluate_lattice(formula).matrix - x.matrix) < 1e-9


def test_direct_sum_membership_for_zero_projection():
    formula = direct_sum_membership(Projection.zero(6), 2, 3)
    assert evaluate_lattice(formula).rank == 0


def test_embeddings_and_product_projection():
    up = Projection.onto(UP_Z)
    assert inf_norm(embed_left(Projection.identity(2), 2).matrix - np.eye(4)) == 0.0
    product = meet(embed_left(up, 2), embed_right(Projection.onto(UP_X), 2))
    assert inf_norm(product.matrix - product_projection(UP_Z, UP_X).matrix) < 1e-12


def test_schmidt_coefficients_are_locally_invariant(rng):
    for _ in range(50):
        d1, d2 = (int(d) for d in rng.integers(2, 5, size=2))
        gamma = random_unit_vector(d1 * d2, rng)
        local = np.kron(random_unitary(d1, rng), random_unitary(d2, rng))
        assert_allclose(schmidt(local @ gamma, d1, d2).coefficients, schmidt(gamma, d1, d2).coefficients, atol=1e-12)


def test_left_and_right_embeddings_commute(rng):
    for _ in range(100):
        d1, d2 = (int(d) for d in rng.integers(2, 5, size=2))
        left = embed_left(random_projection(d1, rng), d2).matrix
        right = embed_right(random_projection(d2, rng), d1).matrix
        assert inf_norm(left @ right - right @ left) < 1e-15


def test_embed_left_preserves_complement_and_meet(rng):
    for _ in range(100):
        d1, d2 = (int(d) for d in rng.integers(2, 5, size=2))
        x, y = random_commuting_family(d1, 2, rng)
        assert inf_norm(embed_left(x.complement(), d2).matrix - embed_left(x, d2).complement().matrix) < 1e-15
        lifted = meet(embed_left(x, d2), embed_left(y, d2))
        assert inf_norm(lifted.matrix - embed_left(meet(x, y), d2).matrix) < 1e-12

import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from app.models import KSInstance, Projection, SigmaComplex
from app.seed import CANONICAL_FRAME, load_bundled_ks_instance
from app.services.boolean_complex import (
    algebra_contains,
    brute_force_colorable,
    brute_force_colorings,
    common_subalgebra,
    complement,
    complete_orthogonal_pairs,
    complex_skeleton,
    direction_classes,
    direction_of_atom,
    element_mask,
    embeds_in_single_algebra,
    generate_algebra,
    instance_from_complex,
    is_valid_coloring,
    join,
    ks_colorable,
    ks_colorable_z3,
    meet,
    projection_equal,
    sigma_complex_from_instance,
    spin1_atom,
    spin1_operators,
    spin1_square,
    triple_algebra,
)
from app.services.linalg import inf_norm, random_commuting_family
from app.services.shared.errors import (
    AlgebraTooLargeError,
    BadShapeError,
    NonCommutingGeneratorsError,
    NotOrthogonalFrameError,
    SearchBudgetExceededError,
    TooManyVariablesError,
)


def rotation_about_z(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def two_disjoint_triples():
    tilted = Rotation.from_euler("zxz", [0.3, 0.5, 0.7]).as_matrix().T
    directions = np.vstack([np.eye(3), tilted])
    return KSInstance(directions=directions, triples=((0, 1, 2), (3, 4, 5)), name="two-triples")


def test_casimir_is_twice_identity():
    sx, sy, sz = spin1_operators()
    assert inf_norm(sx @ sx + sy @ sy + sz @ sz - 2 * np.eye(3)) < 1e-12


def test_triple_algebra_canonical_frame():
    algebra = triple_algebra(*CANONICAL_FRAME)
    assert algebra.size == 8
    assert algebra.atom_count == 3
    for axis in CANONICAL_FRAME:
        assert algebra_contains(algebra, spin1_atom(axis))
        assert algebra_contains(algebra, spin1_square(axis))


def test_rotated_frame_is_unitarily_equivalent():
    frame = [rotation_about_z(0.7) @ v for v in CANONICAL_FRAME]
    algebra = triple_algebra(*frame)
    assert algebra.size == 8
    canonical = triple_algebra(*CANONICAL_FRAME)
    assert not algebra_contains(canonical, spin1_square(frame[0]))
    assert algebra_contains(canonical, spin1_square(frame[2]))


def test_triple_algebra_rejects_non_orthogonal_frame():
    with pytest.raises(NotOrthogonalFrameError):
        triple_algebra([1, 0, 0], np.array([1, 1, 0]) / np.sqrt(2), [0, 0, 1])


def test_generate_algebra_single_generator():
    p = Projection(np.diag([1.0, 0.0, 0.0]))
    algebra = generate_algebra([p])
    assert algebra.size == 4
    assert element_mask(algebra, Projection.identity(3)) == algebra.full_mask
    assert element_mask(algebra, Projection.zero(3)) == 0
    assert algebra_contains(algebra, complement(p))


def test_generate_algebra_rejects_non_commuting_generators():
    with pytest.raises(NonCommutingGeneratorsError) as info:
        generate_algebra([Projection.onto([1, 0]), Projection.onto([1, 1])])
    assert info.value.details["pair"] == [0, 1]


def test_generate_algebra_respects_element_cap(app):
    app.config["ALGEBRA_ELEMENT_CAP"] = 4
    family = [Projection(np.diag(row)) for row in np.eye(3)]
    with pytest.raises(AlgebraTooLargeError):
        generate_algebra(family)


def test_empty_generators_need_a_dimension():
    assert generate_algebra([], dim=2).size == 2
    with pytest.raises(ValueError):
        generate_algebra([])


@pytest.mark.parametrize("dim", range(2, 7))
def test_lattice_operations_agree_with_atom_bitsets(dim, rng):
    for _ in range(5):
        algebra = generate_algebra(random_commuting_family(dim, 3, rng))
        masks = range(algebra.size)
        for a in masks:
            x = algebra.element(a)
            assert element_mask(algebra, complement(x)) == algebra.full_mask ^ a
            for b in masks:
                y = algebra.element(b)
                assert element_mask(algebra, meet(x, y)) == a & b
                assert element_mask(algebra, join(x, y)) == a | b
                assert projection_equal(complement(join(x, y)), meet(complement(x), complement(y)))


def test_common_subalgebra_of_frames_sharing_an_axis():
    first = triple_algebra(*CANONICAL_FRAME)
    second = triple_algebra(*[rotation_about_z(0.4) @ v for v in CANONICAL_FRAME])
    common = common_subalgebra(first, second)
    assert common.size == 4
    assert algebra_contains(common, spin1_atom([0, 0, 1]))


def test_single_triple_is_colorable():
    instance = KSInstance(directions=np.eye(3), triples=((0, 1, 2),), name="one")
    result = ks_colorable(instance)
    assert result.status == "SAT"
    assert is_valid_coloring(instance, dict(result.witness))
    assert len(brute_force_colorings(instance)) == 3


def test_empty_instance_is_colorable():
    result = ks_colorable(KSInstance(directions=np.zeros((0, 3)), triples=(), name="empty"))
    assert result.status == "SAT"
    assert result.witness == {}


def test_two_disjoint_triples_have_nine_colorings():
    instance = two_disjoint_triples()
    assert len(brute_force_colorings(instance)) == 9
    assert brute_force_colorable(instance).satisfiable
    assert ks_colorable_z3(instance).status == "SAT"


def test_antipodal_directions_share_a_class():
    directions = np.vstack([np.eye(3), -np.eye(3)[:1]])
    instance = KSInstance(directions=directions, triples=((3, 1, 2),))
    assert direction_classes(instance) == [0, 1, 2, 0]


def test_brute_force_direction_cap():
    with pytest.raises(TooManyVariablesError):
        brute_force_colorings(load_bundled_ks_instance())


def test_bad_triples_are_rejected():
    with pytest.raises(BadShapeError):
        ks_colorable(KSInstance(directions=np.eye(3), triples=((0, 1, 1),)))
    skewed = np.array([[1, 0, 0], [0, 1, 0], [0, 0.6, 0.8]])
    with pytest.raises(NotOrthogonalFrameError):
        ks_colorable(KSInstance(directions=skewed, triples=((0, 1, 2),)))


def test_bundled_instance_shape():
    instance = load_bundled_ks_instance()
    assert instance.direction_count == 57
    assert len(instance.triples) == 40


def test_bundled_instance_is_not_colorable():
    instance = load_bundled_ks_instance()
    assert ks_colorable(instance).status == "UNSAT"
    assert ks_colorable_z3(instance).status == "UNSAT"


def test_bundled_instance_search_budget():
    with pytest.raises(SearchBudgetExceededError):
        ks_colorable(load_bundled_ks_instance(), node_budget=1)


def random_sub_instance(instance, rng, cap):
    chosen, used = [], []
    for t in rng.permutation(len(instance.triples)):
        triple = [int(d) for d in instance.triples[t]]
        extra = [d for d in triple if d not in used]
        if len(used) + len(extra) > cap:
            continue
        used.extend(extra)
        chosen.append(triple)
    index = {d: i for i, d in enumerate(used)}
    return KSInstance(
        directions=instance.directions[used],
        triples=tuple(tuple(index[d] for d in triple) for triple in chosen),
        name="sub",
    )


def test_search_agrees_with_brute_force_on_bundled_sub_instances(rng):
    bundled = load_bundled_ks_instance()
    for _ in range(100):
        sub = random_sub_instance(bundled, rng, cap=int(rng.integers(3, 16)))
        result = ks_colorable(sub)
        assert result.status == brute_force_colorable(sub).status
        if result.status == "SAT":
            assert is_valid_coloring(sub, dict(result.witness))


def test_completion_rebuilds_bundled_instance():
    bundled = load_bundled_ks_instance()
    rebuilt = complete_orthogonal_pairs(bundled.directions[:33])
    assert rebuilt.direction_count == 57
    assert len(rebuilt.triples) == 40


def test_bundled_complex_does_not_embed():
    q = sigma_complex_from_instance(load_bundled_ks_instance())
    assert len(q.algebras) == 40
    result = embeds_in_single_algebra(q)
    assert not result.embeds
    assert result.true_atoms is None


def test_single_algebra_embeds():
    q = SigmaComplex(algebras=(triple_algebra(*CANONICAL_FRAME),), dim=3)
    result = embeds_in_single_algebra(q)
    assert result.embeds
    assert len(result.true_atoms) == 1


def test_induced_instance_round_trip():
    instance = two_disjoint_triples()
    q = sigma_complex_from_instance(instance)
    induced = instance_from_complex(q)
    assert induced.direction_count == 6
    assert len(induced.triples) == 2
    assert len(brute_force_colorings(induced)) == 9


def test_skeleton_of_frames_sharing_an_axis():
    q = SigmaComplex(
        algebras=(
            triple_algebra(*CANONICAL_FRAME),
            triple_algebra(*[rotation_about_z(0.4) @ v for v in CANONICAL_FRAME]),
        ),
        dim=3,
    )
    skeleton = complex_skeleton(q)
    assert skeleton.vertices == 5
    assert len(skeleton.shared_vertices) == 1


def test_direction_of_atom_recovers_axis():
    axis = np.array([1.0, 2.0, 2.0]) / 3.0
    recovered = direction_of_atom(spin1_atom(axis))
    assert np.allclose(np.abs(recovered @ axis), 1.0)

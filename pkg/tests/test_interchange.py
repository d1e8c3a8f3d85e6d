import json

import numpy as np
import pytest

from app.interchange import (
    canonical,
    decode_ks_instance,
    decode_lattice,
    decode_matrix,
    decode_mesh,
    decode_operator,
    decode_valuation,
    decode_vector,
    dumps_canonical,
    encode_colorability,
    encode_ks_instance,
    encode_lattice,
    encode_matrix,
    encode_mesh,
    encode_operator,
    encode_paradox,
    encode_tautology,
    round_float,
)
from app.models import LatticeLeaf, LatticeMeet
from app.seed import SPIN_HALF_Y, UP_X, UP_Z, load_bundled_ks_instance
from app.services.boolean_complex import ks_colorable
from app.services.linalg import inf_norm, random_unitary
from app.services.qlogic import (
    check_paradox,
    classical_tautology,
    eval_quantum,
    four_dim_ks_formula,
    four_dim_ks_valuation,
    parse_formula,
)
from app.services.reck import decompose, reconstruct
from app.services.shared.errors import BadShapeError, NotHermitianError, NotProjectionError


def test_round_float_normalizes():
    assert round_float(0.1 + 0.2) == 0.3
    assert str(round_float(-0.0)) == "0.0"
    with pytest.raises(BadShapeError):
        round_float(float("nan"))


def test_canonical_strips_numpy_types():
    value = canonical({"a": np.float64(1.5), "b": np.arange(3), "c": np.bool_(True), "d": float("nan"), 2: 1j})
    assert value == {"a": 1.5, "b": [0, 1, 2], "c": True, "d": None, "2": [0.0, 1.0]}
    assert type(value["b"][0]) is int


def test_dumps_canonical_is_sorted_and_terminated():
    text = dumps_canonical({"b": 1, "a": [np.float64(2.0)]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [2.0], "b": 1}


def test_matrix_schema():
    payload = encode_matrix(SPIN_HALF_Y)
    assert payload["rows"] == 2 and payload["cols"] == 2
    assert payload["data"][1] == [0.0, -0.5]
    assert inf_norm(decode_matrix(payload) - SPIN_HALF_Y) == 0.0


def test_matrix_accepts_real_entries():
    assert inf_norm(decode_matrix({"rows": 1, "cols": 2, "data": [1, 2.5]}) - np.array([[1, 2.5]])) == 0.0


@pytest.mark.parametrize(
    "payload",
    [
        {"rows": 2, "cols": 2},
        {"rows": 0, "cols": 1, "data": []},
        {"rows": 2, "cols": 1, "data": [[1, 0]]},
        {"rows": 1, "cols": 1, "data": [[1, 0, 0]]},
        {"rows": 1, "cols": 1, "data": [["inf", 0]]},
        [[1, 0]],
    ],
)
def test_malformed_matrices_are_rejected(payload):
    with pytest.raises(BadShapeError):
        decode_matrix(payload)


def test_vectors_and_operator_kinds():
    assert np.allclose(decode_vector(encode_matrix(UP_X)), UP_X)
    with pytest.raises(BadShapeError):
        decode_vector(encode_matrix(np.eye(2)))
    payload = encode_operator(np.eye(2), kind="state")
    assert payload["kind"] == "state"
    with pytest.raises(BadShapeError):
        decode_operator(payload, kind="observable")
    assert inf_norm(decode_operator(payload, kind="state") - np.eye(2)) == 0.0


def test_mesh_json_reconstructs_the_unitary(rng):
    u = random_unitary(4, rng)
    restored = decode_mesh(json.loads(dumps_canonical(encode_mesh(decompose(u)))))
    assert inf_norm(reconstruct(restored) - u) < 1e-9
    with pytest.raises(BadShapeError):
        decode_mesh({"dim": 2, "stages": [{"j": 1}], "phases": [0, 0]})


def test_ks_instance_json():
    instance = load_bundled_ks_instance()
    payload = encode_ks_instance(instance)
    assert len(payload["directions"]) == 57
    restored = decode_ks_instance(payload)
    assert restored.triples == instance.triples
    assert np.allclose(restored.directions, instance.directions, atol=1e-11)
    with pytest.raises(BadShapeError):
        decode_ks_instance({"directions": [[1, 0]], "triples": [[0, "x", 2]]})


def test_colorability_json():
    payload = encode_colorability(ks_colorable(load_bundled_ks_instance()))
    assert payload["status"] == "UNSAT"
    assert payload["witness"] is None
    assert payload["nodes_explored"] > 0


def test_lattice_json():
    formula = LatticeMeet((LatticeLeaf(left=UP_Z, right=UP_X), LatticeLeaf(left=UP_X, right=UP_Z)))
    payload = encode_lattice(formula)
    assert payload["op"] == "meet"
    restored = decode_lattice(payload)
    assert isinstance(restored, LatticeMeet)
    assert np.allclose(restored.children[0].right, UP_X)
    with pytest.raises(BadShapeError):
        decode_lattice({"op": "join", "children": []})
    with pytest.raises(BadShapeError):
        decode_lattice({"op": "xor"})


def test_valuation_json():
    valuation = decode_valuation({"x": encode_matrix(np.diag([1.0, 0.0]))})
    assert valuation["x"].rank == 1
    with pytest.raises(BadShapeError):
        decode_valuation([1, 2])
    bad = decode_valuation({"x": encode_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))})
    with pytest.raises(NotHermitianError):
        eval_quantum(parse_formula("!x"), bad)
    scaled = decode_valuation({"x": encode_matrix(np.diag([2.0, 0.0]))})
    with pytest.raises(NotProjectionError):
        eval_quantum(parse_formula("x"), scaled)


def test_tautology_and_paradox_json():
    payload = encode_tautology(classical_tautology(parse_formula("x & !x")))
    assert payload == {"tautology": False, "countermodel": {"x": False}, "assignments_checked": 1}

    report = encode_paradox(check_paradox(four_dim_ks_formula(), four_dim_ks_valuation()))
    assert report["paradox"] is True
    assert report["outcome"]["defined"] is True
    assert report["tautology"]["tautology"] is True
    json.dumps(report)


def test_error_payload_is_json_safe():
    error = BadShapeError("bad", shape=(np.int64(2), 3), norm=np.float64(0.5), where=object)
    payload = error.to_payload()
    assert payload["error"] == "bad_shape"
    assert payload["details"]["shape"] == [2.0, 3]
    assert payload["details"]["norm"] == 0.5
    json.dumps(payload)

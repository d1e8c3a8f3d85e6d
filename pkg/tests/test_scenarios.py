import numpy as np
import pytest

from app.interchange import dumps_canonical, encode_scenario_result
from app.scenarios import (
    SCENARIOS,
    interaction_unitary,
    ring_hamiltonian,
    run_all_scenarios,
    run_scenario,
    scenario_epr,
    scenario_measurement_noninjective,
    scenario_triple,
    scenario_two_slit,
    slit_geometry,
)
from app.services.linalg import inf_norm
from app.services.shared.errors import BadGeometryError


def describe_failures(result):
    return [(a.description, a.expected, a.actual) for a in result.failures]


@pytest.mark.parametrize(
    "scenario",
    [scenario_triple, scenario_two_slit, scenario_epr, scenario_measurement_noninjective],
)
def test_scenario_passes(scenario):
    result = scenario()
    assert result.assertions
    assert result.passed, describe_failures(result)


def test_slit_geometry_default():
    geometry = slit_geometry(256, 16, 4)
    assert list(geometry.first) == [118, 119, 120, 121]
    assert list(geometry.second) == [134, 135, 136, 137]


@pytest.mark.parametrize(
    "sites,separation,width",
    [
        (256, 2, 4),
        (256, 0, 4),
        (0, 16, 4),
        (16, 14, 4),
    ],
)
def test_slit_geometry_rejects_bad_layouts(sites, separation, width):
    with pytest.raises(BadGeometryError):
        slit_geometry(sites, separation, width)


@pytest.mark.parametrize("distance", [0.0, -1.0, float("inf")])
def test_two_slit_rejects_bad_distance(distance):
    with pytest.raises(BadGeometryError):
        scenario_two_slit(distance=distance)


def test_two_slit_artifacts():
    result = scenario_two_slit()
    assert result.artifacts["slits"] == [[118, 122], [134, 138]]
    assert len(result.artifacts["screen_profile"]) == 256
    assert sum(result.artifacts["screen_profile"]) == pytest.approx(1.0)


def test_two_slit_on_a_smaller_ring(app):
    app.config["TWO_SLIT_SITES"] = 128
    result = scenario_two_slit()
    assert len(result.artifacts["screen_profile"]) == 128
    assert result.passed, describe_failures(result)


def test_ring_hamiltonian_is_a_real_symmetric_laplacian():
    h = ring_hamiltonian(8)
    assert inf_norm(h - h.T) == 0.0
    assert np.allclose(h.sum(axis=1), 0.0)


def test_interaction_unitary_is_unitary():
    u = interaction_unitary()
    assert inf_norm(u @ u.conj().T - np.eye(u.shape[0])) < 1e-12


def test_registry_order_and_lookup():
    assert list(SCENARIOS) == ["triple", "two-slit", "epr", "measurement"]
    assert run_scenario("epr").name == "epr"
    with pytest.raises(KeyError):
        run_scenario("teleportation")


def test_run_all_scenarios():
    results = run_all_scenarios()
    assert [r.name for r in results] == ["triple", "two-slit", "epr", "measurement"]
    assert all(r.passed for r in results)


def test_scenario_json_is_reproducible():
    first = [dumps_canonical(encode_scenario_result(r)) for r in run_all_scenarios()]
    second = [dumps_canonical(encode_scenario_result(r)) for r in run_all_scenarios()]
    assert [text.encode() for text in first] == [text.encode() for text in second]

"""
app/scenarios/registry.py

Named scenarios in their fixed run order.
"""

from __future__ import annotations

from typing import Callable

from ..models import Tolerance
from ..services.shared.operation_results import ScenarioResult
from .epr import scenario_epr
from .measurement import scenario_measurement_noninjective
from .triple import scenario_triple
from .two_slit import scenario_two_slit

SCENARIOS: dict[str, Callable[..., ScenarioResult]] = {
    "triple": scenario_triple,
    "two-slit": scenario_two_slit,
    "epr": scenario_epr,
    "measurement": scenario_measurement_noninjective,
}


def run_scenario(name: str, tol: Tolerance | float | None = None) -> ScenarioResult:
    """
    RAISES
    ------
    KeyError
        For an unregistered name.
    """
    return SCENARIOS[name](tol=tol)


def run_all_scenarios(tol: Tolerance | float | None = None) -> list[ScenarioResult]:
    return [runner(tol=tol) for runner in SCENARIOS.values()]

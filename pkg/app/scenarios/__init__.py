"""
app/scenarios/__init__.py

Worked physical scenarios that double as integration checks.
"""

from __future__ import annotations

from .epr import scenario_epr
from .measurement import interaction_unitary, scenario_measurement_noninjective
from .registry import SCENARIOS, run_all_scenarios, run_scenario
from .triple import scenario_triple
from .two_slit import ring_hamiltonian, scenario_two_slit, slit_geometry

__all__ = [
    "scenario_triple",
    "scenario_two_slit",
    "scenario_epr",
    "scenario_measurement_noninjective",
    "slit_geometry",
    "ring_hamiltonian",
    "interaction_unitary",
    "SCENARIOS",
    "run_scenario",
    "run_all_scenarios",
]

"""
app/commands/scenario.py

`scenario` command group. Every subcommand prints the scenario report and
exits 1 when any assertion failed.
"""

from __future__ import annotations

from pathlib import Path

import click
from flask.cli import AppGroup

from ..interchange import encode_scenario_result
from ..models import Tolerance
from ..scenarios import (
    run_all_scenarios,
    scenario_epr,
    scenario_measurement_noninjective,
    scenario_triple,
    scenario_two_slit,
)
from ..scenarios.two_slit import DEFAULT_DISTANCE, DEFAULT_SEPARATION, DEFAULT_SLIT_WIDTH, DEFAULT_WAVENUMBER
from ..services.shared.operation_results import ScenarioResult
from .common import apply_seed, engine_command, emit, out_option, seed_option, tol_option

scenario_group = AppGroup("scenario", help="Worked scenarios with pass/fail assertions.")


def _report(result: ScenarioResult, out: Path | None) -> bool:
    emit(encode_scenario_result(result), out)
    return result.passed


@scenario_group.command("triple")
@tol_option
@out_option
@engine_command
def triple_command(tol: Tolerance | None, out: Path | None) -> bool:
    """Spin-1 triple experiment on an orthogonal frame."""
    return _report(scenario_triple(tol), out)


@scenario_group.command("two-slit")
@click.option("--separation", type=int, default=DEFAULT_SEPARATION, show_default=True)
@click.option("--wavenumber", type=float, default=DEFAULT_WAVENUMBER, show_default=True)
@click.option("--distance", type=float, default=DEFAULT_DISTANCE, show_default=True)
@click.option("--slit-width", type=int, default=DEFAULT_SLIT_WIDTH, show_default=True)
@click.option("--sites", type=int, default=None, help="Lattice size (defaults to TWO_SLIT_SITES).")
@tol_option
@out_option
@engine_command
def two_slit_command(
    separation: int,
    wavenumber: float,
    distance: float,
    slit_width: int,
    sites: int | None,
    tol: Tolerance | None,
    out: Path | None,
) -> bool:
    """Interference term with and without registered slits."""
    result = scenario_two_slit(
        separation=separation,
        wavenumber=wavenumber,
        distance=distance,
        slit_width=slit_width,
        sites=sites,
        tol=tol,
    )
    return _report(result, out)


@scenario_group.command("epr")
@tol_option
@out_option
@engine_command
def epr_command(tol: Tolerance | None, out: Path | None) -> bool:
    """Singlet conditioned on a left-hand spin measurement."""
    return _report(scenario_epr(tol), out)


@scenario_group.command("measurement")
@seed_option
@tol_option
@out_option
@engine_command
def measurement_command(seed: int | None, tol: Tolerance | None, out: Path | None) -> bool:
    """Measurement map that no automorphism can represent."""
    apply_seed(seed)
    return _report(scenario_measurement_noninjective(tol), out)


@scenario_group.command("all")
@seed_option
@tol_option
@out_option
@engine_command
def all_command(seed: int | None, tol: Tolerance | None, out: Path | None) -> bool:
    """Run every scenario in registry order."""
    apply_seed(seed)
    results = run_all_scenarios(tol)
    emit(
        {
            "pass": all(result.passed for result in results),
            "scenarios": [encode_scenario_result(result) for result in results],
        },
        out,
    )
    return all(result.passed for result in results)

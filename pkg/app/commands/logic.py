"""
app/commands/logic.py

`logic` command group over formulas.

    logic eval --formula "x | !x" --bindings vals.json
    logic taut --formula "x | !x"
    logic paradox [--formula F --bindings vals.json]     (four-variable KS formula by default)
    logic ks-proposition [--instance file]
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click
from flask.cli import AppGroup

from ..interchange import decode_valuation, encode_eval_outcome, encode_paradox, encode_tautology
from ..models import Tolerance
from ..seed import load_bundled_ks_instance, load_ks_instance
from ..services.qlogic import (
    check_paradox,
    eval_quantum,
    format_formula,
    four_dim_ks_formula,
    four_dim_ks_valuation,
    ks_proposition,
    ks_valuation,
    parse_formula,
    tautology_check,
    variables,
)
from ..services.shared.errors import BadShapeError
from .common import engine_command, emit, input_path, out_option, read_json, tol_option

logic_group = AppGroup("logic", help="Classical and quantum evaluation of propositional formulas.")

formula_option = click.option("--formula", "text", type=str, default=None, help="Formula text, e.g. 'x & !y'.")


@logic_group.command("eval")
@click.option("--formula", "text", type=str, required=True, help="Formula text, e.g. 'x & !y'.")
@input_path("--bindings", "bindings", help="JSON map of variable name to projection matrix.")
@tol_option
@out_option
@engine_command
def eval_command(text: str, bindings: Path, tol: Tolerance | None, out: Path | None) -> None:
    """Evaluate a formula over projections."""
    formula = parse_formula(text)
    outcome = eval_quantum(formula, decode_valuation(read_json(bindings)), tol)
    emit({"formula": format_formula(formula), **encode_eval_outcome(outcome)}, out)


@logic_group.command("taut")
@click.option("--formula", "text", type=str, required=True, help="Formula text, e.g. 'x | !x'.")
@out_option
@engine_command
def taut_command(text: str, out: Path | None) -> None:
    """Classical validity with a countermodel when it fails."""
    formula = parse_formula(text)
    emit({"formula": format_formula(formula), **encode_tautology(tautology_check(formula))}, out)


@logic_group.command("paradox")
@formula_option
@input_path("--bindings", "bindings", required=False, help="JSON map of variable name to projection matrix.")
@tol_option
@out_option
@engine_command
def paradox_command(text: str | None, bindings: Path | None, tol: Tolerance | None, out: Path | None) -> None:
    """Classical tautology that is false under a quantum substitution."""
    if (text is None) != (bindings is None):
        raise BadShapeError("--formula and --bindings go together")
    if text is None:
        formula, valuation = four_dim_ks_formula(), four_dim_ks_valuation()
    else:
        formula, valuation = parse_formula(text), decode_valuation(read_json(bindings))
    report = check_paradox(formula, valuation, tol)
    emit({"formula": format_formula(formula), **encode_paradox(report)}, out)


@logic_group.command("ks-proposition")
@input_path("--instance", "instance_path", required=False, help="KS instance JSON (bundled set by default).")
@tol_option
@out_option
@engine_command
def ks_proposition_command(instance_path: Path | None, tol: Tolerance | None, out: Path | None) -> None:
    """The KS set as one proposition, checked classically and over spin-1 atoms."""
    instance = load_bundled_ks_instance() if instance_path is None else load_ks_instance(instance_path)
    formula = ks_proposition(instance)
    report = check_paradox(formula, ks_valuation(instance), tol)
    payload: dict[str, Any] = {
        "instance": instance.name,
        "triples": len(instance.triples),
        "variables": len(variables(formula)),
        **encode_paradox(report),
    }
    emit(payload, out)

"""
app/commands/engine.py

Single-step commands over the core services.

COMMANDS
--------
spectral   --in A.json                        spectral decomposition
algebra    [--in generators.json]             generated Boolean algebra (B_xyz by default)
ks         [--instance file] [--method]       KS colorability (+ --embed)
state      --in w.json [--projection x.json]  density validation and probabilities
condition  --state w.json --on y.json ...     Lüders / Law of Alternatives
combine    --in gamma.json --d1 --d2          Schmidt form (+ --formula)
evolve     --hamiltonian H.json --state w.json --time t
limit      [--a A.json --b B.json --phi phi.json] [--max-n 6]
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Any

import click
import numpy as np
from flask.cli import with_appcontext

from ..interchange import (
    decode_operator,
    decode_vector,
    encode_classical_limit,
    encode_colorability,
    encode_condition_report,
    encode_lattice,
    encode_projection,
    encode_spectral,
    encode_state,
    encode_vector,
)
from ..models import Projection, Tolerance
from ..seed import CANONICAL_FRAME, SPIN_HALF_X, SPIN_HALF_Z, UP_X, load_bundled_ks_instance, load_ks_instance
from ..services.boolean_complex import (
    embeds_in_single_algebra,
    generate_algebra,
    ks_colorable,
    ks_colorable_z3,
    sigma_complex_from_instance,
    triple_algebra,
)
from ..services.combine import gamma_formula, lattice_residual, schmidt
from ..services.conditioning import condition_on_algebra, join_all, law_of_alternatives, luders
from ..services.dynamics import (
    classical_limit_report,
    evolution_spec,
    evolve_state,
    liouville_residual,
    richardson_ratio,
)
from ..services.linalg import hermitian_eigendecompose
from ..services.shared.errors import BadShapeError
from ..services.shared.guards import require_projection
from ..services.states import is_pure, prob, state_from_density
from .common import engine_command, emit, input_path, out_option, read_json, tol_option


def _projection(path: Path, tol: Tolerance | None) -> Projection:
    eps = tol.eps if tol is not None else Tolerance.from_config().eps
    return Projection(require_projection(decode_operator(read_json(path)), eps))


def _finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


@click.command("spectral")
@input_path("--in", "source", help="Hermitian matrix JSON.")
@tol_option
@out_option
@with_appcontext
@engine_command
def spectral_command(source: Path, tol: Tolerance | None, out: Path | None) -> None:
    """Distinct eigenvalues and eigenprojections of a Hermitian matrix."""
    decomposition = hermitian_eigendecompose(decode_operator(read_json(source)), tol)
    emit(encode_spectral(decomposition), out)


@click.command("algebra")
@input_path("--in", "source", required=False, help="JSON list of commuting projections.")
@tol_option
@out_option
@with_appcontext
@engine_command
def algebra_command(source: Path | None, tol: Tolerance | None, out: Path | None) -> None:
    """Boolean algebra generated by commuting projections (B_xyz without --in)."""
    if source is None:
        algebra = triple_algebra(*CANONICAL_FRAME, tol)
    else:
        data = read_json(source)
        if isinstance(data, dict):
            data = data.get("generators")
        if not isinstance(data, list) or not data:
            raise BadShapeError("Expected a non-empty list of generator matrices")
        algebra = generate_algebra([decode_operator(item) for item in data], tol)
    emit(
        {
            "label": algebra.label,
            "dim": algebra.dim,
            "size": algebra.size,
            "atoms": [encode_projection(atom) for atom in algebra.atoms],
        },
        out,
    )


@click.command("ks")
@input_path("--instance", "instance_path", required=False, help="KS instance JSON (bundled set by default).")
@click.option("--method", type=click.Choice(["search", "z3"]), default="search", show_default=True)
@click.option("--embed", is_flag=True, help="Also decide embedding of the triple algebras into one algebra.")
@click.option("--budget", type=int, default=None, help="Search node budget (defaults to KS_NODE_BUDGET).")
@tol_option
@out_option
@with_appcontext
@engine_command
def ks_command(
    instance_path: Path | None,
    method: str,
    embed: bool,
    budget: int | None,
    tol: Tolerance | None,
    out: Path | None,
) -> None:
    """Kochen-Specker colorability of a direction set."""
    instance = load_bundled_ks_instance() if instance_path is None else load_ks_instance(instance_path)
    if method == "z3":
        result = ks_colorable_z3(instance, tol)
    else:
        result = ks_colorable(instance, tol, node_budget=budget)
    payload: dict[str, Any] = {"instance": instance.name, **encode_colorability(result)}
    if embed:
        embedding = embeds_in_single_algebra(sigma_complex_from_instance(instance, tol), tol, node_budget=budget)
        payload["embedding"] = {"embeds": embedding.embeds, "nodes_explored": embedding.nodes_explored}
    emit(payload, out)


@click.command("state")
@input_path("--in", "source", help="Density matrix JSON.")
@input_path("--projection", "projection_path", required=False, help="Property x whose probability p(x) is reported.")
@tol_option
@out_option
@with_appcontext
@engine_command
def state_command(source: Path, projection_path: Path | None, tol: Tolerance | None, out: Path | None) -> None:
    """Validate a density operator and evaluate p(x)."""
    state = state_from_density(decode_operator(read_json(source), "state"), tol)
    payload: dict[str, Any] = {"state": encode_state(state), "pure": is_pure(state, tol)}
    if projection_path is not None:
        payload["probability"] = prob(state, _projection(projection_path, tol), tol)
    emit(payload, out)


@click.command("condition")
@input_path("--state", "state_path", help="Density matrix JSON.")
@click.option(
    "--on",
    "conditions",
    multiple=True,
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Condition projection; repeat for a disjoint family.",
)
@input_path("--target", "target", required=False, help="Property x for the Law of Alternatives.")
@click.option("--registered", is_flag=True, help="Condition on the partition {y_i} instead of their join.")
@tol_option
@out_option
@with_appcontext
@engine_command
def condition_command(
    state_path: Path,
    conditions: tuple[Path, ...],
    target: Path | None,
    registered: bool,
    tol: Tolerance | None,
    out: Path | None,
) -> None:
    """Lüders conditioning and the Law of Alternatives."""
    state = state_from_density(decode_operator(read_json(state_path), "state"), tol)
    ys = [_projection(path, tol) for path in conditions]
    if target is not None:
        emit(encode_condition_report(law_of_alternatives(state, _projection(target, tol), ys, tol)), out)
        return
    if registered:
        conditioned = condition_on_algebra(state, ys, tol)
    else:
        conditioned = luders(state, join_all(ys, tol), tol)
    emit({"state": encode_state(conditioned)}, out)


@click.command("combine")
@input_path("--in", "source", help="Bipartite unit vector JSON.")
@click.option("--d1", type=click.IntRange(min=1), required=True)
@click.option("--d2", type=click.IntRange(min=1), required=True)
@click.option("--formula", "with_formula", is_flag=True, help="Also emit the lattice formula for P_gamma.")
@tol_option
@out_option
@with_appcontext
@engine_command
def combine_command(
    source: Path,
    d1: int,
    d2: int,
    with_formula: bool,
    tol: Tolerance | None,
    out: Path | None,
) -> None:
    """Schmidt form of a vector in C^d1 (x) C^d2."""
    gamma = decode_vector(read_json(source))
    form = schmidt(gamma, d1, d2, tol)
    payload: dict[str, Any] = {
        "rank": form.rank,
        "coefficients": form.coefficients.tolist(),
        "left_basis": [encode_vector(form.left_basis[:, i]) for i in range(form.rank)],
        "right_basis": [encode_vector(form.right_basis[:, i]) for i in range(form.rank)],
    }
    if with_formula:
        formula = gamma_formula(gamma, d1, d2, tol)
        payload["formula"] = encode_lattice(formula)
        payload["residual"] = lattice_residual(formula, Projection.onto(gamma), tol)
    emit(payload, out)


@click.command("evolve")
@input_path("--hamiltonian", "hamiltonian", help="Hermitian H JSON.")
@input_path("--state", "state_path", help="Density matrix JSON.")
@click.option("--time", "t", type=float, required=True)
@click.option("--hbar", type=float, default=1.0, show_default=True)
@tol_option
@out_option
@with_appcontext
@engine_command
def evolve_command(
    hamiltonian: Path,
    state_path: Path,
    t: float,
    hbar: float,
    tol: Tolerance | None,
    out: Path | None,
) -> None:
    """Evolve a state and report the finite-difference Liouville check."""
    spec = evolution_spec(decode_operator(read_json(hamiltonian)), hbar=hbar, tol=tol)
    state = state_from_density(decode_operator(read_json(state_path), "state"), tol)
    emit(
        {
            "state": encode_state(evolve_state(spec, state, t, tol)),
            "liouville_residual": liouville_residual(spec, state, t, tol=tol),
            "liouville_ratio": _finite_or_none(richardson_ratio(lambda h: liouville_residual(spec, state, t, h, tol))),
        },
        out,
    )


@click.command("limit")
@input_path("--a", "a_path", required=False, help="Observable A (default s_z).")
@input_path("--b", "b_path", required=False, help="Observable B (default s_x).")
@input_path("--phi", "phi_path", required=False, help="Single-copy state vector (default x+).")
@click.option("--max-n", type=click.IntRange(min=1), default=6, show_default=True)
@tol_option
@out_option
@with_appcontext
@engine_command
def limit_command(
    a_path: Path | None,
    b_path: Path | None,
    phi_path: Path | None,
    max_n: int,
    tol: Tolerance | None,
    out: Path | None,
) -> bool:
    """Averaged observables over n copies: variance scaling and commutator decay."""
    a = SPIN_HALF_Z if a_path is None else decode_operator(read_json(a_path))
    b = SPIN_HALF_X if b_path is None else decode_operator(read_json(b_path))
    phi = UP_X if phi_path is None else decode_vector(read_json(phi_path))
    report = classical_limit_report(np.asarray(a), np.asarray(b), np.asarray(phi), list(range(1, max_n + 1)), tol)
    emit(encode_classical_limit(report), out)
    return report.passed


ENGINE_COMMANDS = [
    spectral_command,
    algebra_command,
    ks_command,
    state_command,
    condition_command,
    combine_command,
    evolve_command,
    limit_command,
]

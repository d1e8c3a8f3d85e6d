"""
app/commands/reck.py

`reck` command group: compile, simulate and verify interferometer meshes.

    reck decompose --in U.json [--out mesh.json]
    reck decompose --random 4 --seed 7
    reck simulate  --mesh mesh.json --in psi.json
    reck verify    --mesh mesh.json --target U.json [--tol 1e-9]
    reck observable --in A.json [--state psi.json]
"""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np
from flask.cli import AppGroup

from ..interchange import decode_mesh, decode_operator, decode_vector, encode_mesh, encode_realization
from ..models import Tolerance
from ..services.linalg import random_unitary
from ..services.reck import decompose, port_probabilities, realize_observable, simulate, stage_bound, verify
from ..services.shared.errors import BadShapeError
from ..services.shared.runtime_config import setting
from .common import apply_seed, engine_command, emit, input_path, out_option, read_json, seed_option, tol_option

reck_group = AppGroup("reck", help="Triangular beam-splitter meshes for unitaries and observables.")


@reck_group.command("decompose")
@input_path("--in", "source", required=False, help="Unitary matrix JSON.")
@click.option("--random", "random_dim", type=click.IntRange(min=1), default=None, help="Use a Haar-random unitary of this size.")
@seed_option
@tol_option
@out_option
@engine_command
def decompose_command(
    source: Path | None,
    random_dim: int | None,
    seed: int | None,
    tol: Tolerance | None,
    out: Path | None,
) -> None:
    """Compile a unitary into stages plus output phases."""
    apply_seed(seed)
    if (source is None) == (random_dim is None):
        raise BadShapeError("Give exactly one of --in and --random")
    if source is not None:
        u = decode_operator(read_json(source))
    else:
        u = random_unitary(random_dim, np.random.default_rng(int(setting("SEED", 20240601))))
    mesh = decompose(u, tol)
    payload = encode_mesh(mesh)
    payload["stage_bound"] = stage_bound(mesh.dim)
    emit(payload, out)


@reck_group.command("simulate")
@input_path("--mesh", "mesh_path", help="Mesh program JSON.")
@input_path("--in", "source", help="Input mode amplitudes (unit vector JSON).")
@tol_option
@out_option
@engine_command
def simulate_command(mesh_path: Path, source: Path, tol: Tolerance | None, out: Path | None) -> None:
    """Detection probability per output port."""
    mesh = decode_mesh(read_json(mesh_path))
    emit({"probabilities": simulate(mesh, decode_vector(read_json(source)), tol).tolist()}, out)


@reck_group.command("verify")
@input_path("--mesh", "mesh_path", help="Mesh program JSON.")
@input_path("--target", "target", help="Unitary the mesh should realize.")
@tol_option
@out_option
@engine_command
def verify_command(mesh_path: Path, target: Path, tol: Tolerance | None, out: Path | None) -> bool:
    """Reconstruction residual against a target; exit 1 when above tol."""
    verification = verify(decode_mesh(read_json(mesh_path)), decode_operator(read_json(target)), tol)
    emit({"residual": verification.residual, "pass": verification.passed}, out)
    return verification.passed


@reck_group.command("observable")
@input_path("--in", "source", help="Hermitian matrix JSON.")
@input_path("--state", "state_path", required=False, help="Input state vector for port statistics.")
@tol_option
@out_option
@engine_command
def observable_command(source: Path, state_path: Path | None, tol: Tolerance | None, out: Path | None) -> None:
    """Mesh plus port grouping that measures an observable."""
    realization = realize_observable(decode_operator(read_json(source)), tol)
    payload = encode_realization(realization)
    if state_path is not None:
        distribution = port_probabilities(realization, decode_vector(read_json(state_path)), tol)
        payload["distribution"] = [{"eigenvalue": value, "probability": p} for value, p in distribution]
    emit(payload, out)

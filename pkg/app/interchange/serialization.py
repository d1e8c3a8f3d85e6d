"""
app/interchange/serialization.py

JSON interchange codecs for engine values.

PURPOSE
-------
This module is responsible only for turning engine values into compact,
deterministic JSON-safe structures and back.

SNAPSHOT PHILOSOPHY
-------------------
Encoded output should be:
- deterministic (byte-identical for identical inputs)
- safe to JSON-encode
- free of numpy types

Therefore:
- floats are rounded to 12 significant digits and −0.0 becomes 0.0
- complex entries are [re, im] pairs
- `dumps_canonical` sorts keys and ends with a newline

SCHEMAS
-------
matrix        {"rows": n, "cols": m, "data": [[re, im], ...]}  (row-major)
vector        matrix schema with cols = 1
state         matrix schema + {"kind": "state"}
observable    matrix schema + {"kind": "observable"}
spectral      [{"eigenvalue": λ, "projection": matrix}, ...]
ks instance   {"directions": [[x,y,z], ...], "triples": [[i,j,k], ...]}
colorability  {"status": "SAT"|"UNSAT", "witness": {index: 0|1} | null, "nodes_explored": n}
condition     {"normalizer", "classical", "interference", "direct", "state"}
lattice       {"op": "leaf", "left": vector, "right": vector}
              {"op": "meet"|"join", "children": [...]}
mesh          {"dim": n, "stages": [{"j","k","omega","phi"}], "phases": [...]}
limit         [{"n", "var_abar", "delta_comm"}, ...]
valuation     {"name": matrix, ...}
eval outcome  {"defined", "value": matrix | null, "offending": [f, g] | null, "commutator_norm"}
paradox       {"tautology": {...}, "outcome": {...}, "distance_from_identity", "differs_from_identity", "paradox"}

IMPORTANT
---------
Decoders validate shape and finiteness only. Mathematical preconditions
(hermiticity, unitarity, ...) are enforced by the services.
"""

from __future__ import annotations

import json
import math
from typing import Any, Mapping

import numpy as np

from ..models import (
    ClassicalLimitReport,
    ColorabilityResult,
    ConditionReport,
    EvalOutcome,
    KSInstance,
    LatticeJoin,
    LatticeLeaf,
    LatticeMeet,
    MeshProgram,
    ObservableRealization,
    ParadoxReport,
    Projection,
    SpectralDecomposition,
    State,
    TautologyResult,
    TwoModeStage,
)
from ..services.shared.errors import BadShapeError
from ..services.shared.operation_results import Assertion, ScenarioResult


def round_float(value: Any) -> float:
    """
    Round to 12 significant digits; normalize −0.0.

    EXAMPLES
    --------
    round_float(0.1 + 0.2)   -> 0.3
    round_float(-0.0)        -> 0.0
    """
    number = float(value)
    if not math.isfinite(number):
        raise BadShapeError(f"Cannot encode non-finite value {number!r}")
    rounded = float(f"{number:.12g}")
    return 0.0 if rounded == 0 else rounded


def canonical(value: Any) -> Any:
    """
    Recursively convert numpy scalars/arrays and floats into canonical JSON data.
    """
    if isinstance(value, Mapping):
        return {str(key): canonical(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(item) for item in value]
    if isinstance(value, np.ndarray):
        return canonical(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round_float(value) if math.isfinite(value) else None
    if isinstance(value, (complex, np.complexfloating)):
        return [round_float(value.real), round_float(value.imag)]
    return value


def dumps_canonical(value: Any) -> str:
    return json.dumps(canonical(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# matrices and vectors
# ---------------------------------------------------------------------------


def encode_matrix(matrix: Any) -> dict[str, Any]:
    array = np.asarray(matrix, dtype=np.complex128)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    rows, cols = array.shape
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[round_float(z.real), round_float(z.imag)] for z in array.reshape(-1)],
    }


def decode_matrix(obj: Any) -> np.ndarray:
    """
    Decode the matrix schema into a complex128 array.

    RAISES
    ------
    BadShapeError
        Missing keys, wrong lengths, malformed entries or non-finite numbers.
    """
    if not isinstance(obj, Mapping) or not {"rows", "cols", "data"} <= set(obj):
        raise BadShapeError("Matrix JSON needs 'rows', 'cols' and 'data'")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows <= 0 or cols <= 0:
        raise BadShapeError("Matrix 'rows' and 'cols' must be positive integers", rows=rows, cols=cols)
    if not isinstance(data, list) or len(data) != rows * cols:
        raise BadShapeError(
            f"Matrix 'data' must hold {rows * cols} entries",
            expected=rows * cols,
            actual=len(data) if isinstance(data, list) else None,
        )
    entries = []
    for position, entry in enumerate(data):
        if isinstance(entry, (int, float)):
            entry = [entry, 0.0]
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise BadShapeError(f"Matrix entry {position} must be [re, im]", position=position)
        entries.append(complex(float(entry[0]), float(entry[1])))
    array = np.array(entries, dtype=np.complex128).reshape(rows, cols)
    if not np.all(np.isfinite(array)):
        raise BadShapeError("Matrix entries must be finite")
    return array


def encode_vector(vector: Any) -> dict[str, Any]:
    return encode_matrix(np.asarray(vector, dtype=np.complex128).reshape(-1, 1))


def decode_vector(obj: Any) -> np.ndarray:
    array = decode_matrix(obj)
    if 1 not in array.shape:
        raise BadShapeError("Vector JSON must have a single column (or row)", shape=list(array.shape))
    return array.reshape(-1)


def encode_state(state: State) -> dict[str, Any]:
    payload = encode_matrix(state.density)
    payload["kind"] = "state"
    return payload


def encode_operator(matrix: Any, kind: str = "observable") -> dict[str, Any]:
    payload = encode_matrix(matrix)
    payload["kind"] = kind
    return payload


def decode_operator(obj: Any, kind: str | None = None) -> np.ndarray:
    """
    Decode a matrix, checking the optional "kind" tag when `kind` is given.
    """
    if kind is not None and isinstance(obj, Mapping) and "kind" in obj and obj["kind"] != kind:
        raise BadShapeError(f"Expected kind '{kind}', got '{obj['kind']}'", kind=obj["kind"])
    return decode_matrix(obj)


def encode_projection(projection: Projection) -> dict[str, Any]:
    return encode_matrix(projection.matrix)


def encode_spectral(decomposition: SpectralDecomposition) -> list[dict[str, Any]]:
    return [
        {"eigenvalue": round_float(value), "projection": encode_projection(projection)}
        for value, projection in zip(decomposition.eigenvalues, decomposition.eigenprojections)
    ]


# ---------------------------------------------------------------------------
# boolean-complex
# ---------------------------------------------------------------------------


def encode_ks_instance(instance: KSInstance) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "directions": [[round_float(x) for x in row] for row in instance.directions],
        "triples": [list(triple) for triple in instance.triples],
    }
    if instance.name:
        payload["name"] = instance.name
    return payload


def decode_ks_instance(obj: Any) -> KSInstance:
    if not isinstance(obj, Mapping) or "directions" not in obj or "triples" not in obj:
        raise BadShapeError("KS instance JSON needs 'directions' and 'triples'")
    try:
        directions = np.array(obj["directions"], dtype=np.float64).reshape(-1, 3)
        triples = tuple(tuple(int(i) for i in triple) for triple in obj["triples"])
    except (TypeError, ValueError) as exc:
        raise BadShapeError(f"Malformed KS instance: {exc}") from exc
    if not np.all(np.isfinite(directions)):
        raise BadShapeError("KS directions must be finite")
    return KSInstance(directions=directions, triples=triples, name=str(obj.get("name", "")))


def encode_colorability(result: ColorabilityResult) -> dict[str, Any]:
    witness = None
    if result.witness is not None:
        witness = {str(index): int(value) for index, value in sorted(result.witness.items())}
    return {"status": result.status, "witness": witness, "nodes_explored": int(result.nodes_explored)}


# ---------------------------------------------------------------------------
# conditioning
# ---------------------------------------------------------------------------


def encode_condition_report(report: ConditionReport) -> dict[str, Any]:
    def optional(value: float | None) -> float | None:
        return None if value is None else round_float(value)

    return {
        "normalizer": round_float(report.normalizer),
        "classical": optional(report.classical_part),
        "interference": optional(report.interference_part),
        "direct": optional(report.direct),
        "state": encode_matrix(report.conditioned.density),
    }


# ---------------------------------------------------------------------------
# combine
# ---------------------------------------------------------------------------


def encode_lattice(formula: Any) -> dict[str, Any]:
    if isinstance(formula, LatticeLeaf):
        return {"op": "leaf", "left": encode_vector(formula.left), "right": encode_vector(formula.right)}
    if isinstance(formula, LatticeMeet):
        return {"op": "meet", "children": [encode_lattice(child) for child in formula.children]}
    if isinstance(formula, LatticeJoin):
        return {"op": "join", "children": [encode_lattice(child) for child in formula.children]}
    raise TypeError(f"Not a lattice formula: {type(formula).__name__}")


def decode_lattice(obj: Any) -> Any:
    if not isinstance(obj, Mapping) or "op" not in obj:
        raise BadShapeError("Lattice JSON needs an 'op'")
    op = obj["op"]
    if op == "leaf":
        return LatticeLeaf(left=decode_vector(obj["left"]), right=decode_vector(obj["right"]))
    if op in ("meet", "join"):
        children = tuple(decode_lattice(child) for child in obj.get("children", []))
        if not children:
            raise BadShapeError(f"'{op}' node needs children")
        return LatticeMeet(children) if op == "meet" else LatticeJoin(children)
    raise BadShapeError(f"Unknown lattice op '{op}'", op=op)


# ---------------------------------------------------------------------------
# reck-compiler
# ---------------------------------------------------------------------------


def encode_mesh(mesh: MeshProgram) -> dict[str, Any]:
    return {
        "dim": int(mesh.dim),
        "stages": [
            {"j": s.j, "k": s.k, "omega": round_float(s.omega), "phi": round_float(s.phi)} for s in mesh.stages
        ],
        "phases": [round_float(alpha) for alpha in mesh.output_phases],
    }


def decode_mesh(obj: Any) -> MeshProgram:
    if not isinstance(obj, Mapping) or not {"dim", "stages", "phases"} <= set(obj):
        raise BadShapeError("Mesh JSON needs 'dim', 'stages' and 'phases'")
    try:
        stages = tuple(
            TwoModeStage(j=int(s["j"]), k=int(s["k"]), omega=float(s["omega"]), phi=float(s["phi"]))
            for s in obj["stages"]
        )
        return MeshProgram(dim=int(obj["dim"]), stages=stages, output_phases=[float(a) for a in obj["phases"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadShapeError(f"Malformed mesh: {exc}") from exc


def encode_realization(realization: ObservableRealization) -> dict[str, Any]:
    return {
        "mesh": encode_mesh(realization.mesh),
        "port_groups": [
            {"eigenvalue": round_float(value), "ports": list(ports)} for value, ports in realization.port_groups
        ],
    }


# ---------------------------------------------------------------------------
# symmetry-dynamics
# ---------------------------------------------------------------------------


def encode_assertion(assertion: Assertion) -> dict[str, Any]:
    return {
        "description": assertion.description,
        "expected": canonical(assertion.expected),
        "actual": canonical(assertion.actual),
        "pass": assertion.passed,
    }


def encode_classical_limit(report: ClassicalLimitReport) -> dict[str, Any]:
    return {
        "rows": [
            {"n": row.n, "var_abar": round_float(row.var_abar), "delta_comm": round_float(row.delta_comm)}
            for row in report.rows
        ],
        "exponent": None if report.exponent is None else round_float(report.exponent),
        "variance_scaling_ok": report.variance_scaling_ok,
        "monotone_decreasing": report.monotone_decreasing,
        "final_ratio": None if report.final_ratio is None else round_float(report.final_ratio),
        "pass": report.passed,
        "checks": [encode_assertion(check) for check in report.checks],
    }


# ---------------------------------------------------------------------------
# qlogic
# ---------------------------------------------------------------------------


def decode_valuation(obj: Any) -> dict[str, Projection]:
    if not isinstance(obj, Mapping):
        raise BadShapeError("Valuation JSON must map variable names to matrices")
    return {str(name): Projection(decode_matrix(matrix)) for name, matrix in obj.items()}


def encode_eval_outcome(outcome: EvalOutcome) -> dict[str, Any]:
    from ..services.qlogic.syntax import format_formula

    return {
        "defined": outcome.defined,
        "value": encode_projection(outcome.value) if outcome.defined else None,
        "offending": None if outcome.offending is None else [format_formula(f) for f in outcome.offending],
        "commutator_norm": None if outcome.commutator_norm is None else round_float(outcome.commutator_norm),
    }


def encode_tautology(result: TautologyResult) -> dict[str, Any]:
    return {
        "tautology": result.tautology,
        "countermodel": None if result.countermodel is None else dict(sorted(result.countermodel.items())),
        "assignments_checked": result.assignments_checked,
    }


def encode_paradox(report: ParadoxReport) -> dict[str, Any]:
    return {
        "tautology": encode_tautology(report.tautology),
        "outcome": encode_eval_outcome(report.outcome),
        "distance_from_identity": canonical(report.distance_from_identity),
        "differs_from_identity": report.differs_from_identity,
        "paradox": report.paradox,
    }


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------


def encode_scenario_result(result: ScenarioResult) -> dict[str, Any]:
    return {
        "name": result.name,
        "pass": result.passed,
        "assertions": [encode_assertion(a) for a in result.assertions],
        "artifacts": canonical(dict(result.artifacts)),
    }
